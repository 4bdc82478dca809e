#include "tjcm/husimi_wehrl.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tjcm {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes on (-1, 1) in ascending order.
GaussLegendre gauss_legendre(std::size_t n)
{
    const int order = static_cast<int>(n);
    // Non-negative zeros, ascending; zero itself is included for odd orders.
    const std::vector<double> positive = boost::math::legendre_p_zeros<double>(order);

    GaussLegendre gl;
    gl.nodes.reserve(n);
    gl.weights.reserve(n);
    auto weight = [order](double x) {
        const double dp = boost::math::legendre_p_prime<double>(order, x);
        return 2.0 / ((1.0 - x * x) * dp * dp);
    };
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        if (*it == 0.0)
            continue;
        gl.nodes.push_back(-*it);
        gl.weights.push_back(weight(*it));
    }
    for (const double x : positive) {
        gl.nodes.push_back(x);
        gl.weights.push_back(weight(x));
    }
    return gl;
}

double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

} // namespace

SphereGrid::SphereGrid(std::size_t n_theta, std::size_t n_phi) : n_theta_(n_theta), n_phi_(n_phi)
{
    if (n_theta < 1 || n_phi < 1)
        throw std::invalid_argument("sphere grid needs at least one node per direction");

    const GaussLegendre gl = gauss_legendre(n_theta);
    const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n_phi);

    nodes_.reserve(n_theta * n_phi);
    weights_.reserve(n_theta * n_phi);
    // Ascending theta means descending cos theta.
    for (std::size_t i = n_theta; i-- > 0;) {
        const double theta = std::acos(gl.nodes[i]);
        for (std::size_t j = 0; j < n_phi; ++j) {
            nodes_.push_back({theta, dphi * static_cast<double>(j)});
            weights_.push_back(gl.weights[i] * dphi);
        }
    }
}

double SphereGrid::integrate(const std::vector<double>& values) const
{
    if (values.size() != weights_.size())
        throw std::invalid_argument("sample count does not match the sphere grid");
    double s = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k)
        s += weights_[k] * values[k];
    return s;
}

double atomic_q(const BlochVector& b, double theta_c, double phi_c)
{
    return (1.0 + b.rho_z * std::cos(theta_c) +
            (b.rho_x * std::cos(phi_c) + b.rho_y * std::sin(phi_c)) * std::sin(theta_c)) /
           kFourPi;
}

QFunctionField q_function(const BlochVector& b, const SphereGrid& grid)
{
    QFunctionField field;
    field.values.reserve(grid.size());
    for (const auto& p : grid.nodes())
        field.values.push_back(atomic_q(b, p.theta, p.phi));
    return field;
}

double wehrl_entropy(const BlochVector& b, const SphereGrid& grid)
{
    if (grid.n_theta() < kMinWehrlGridTheta || grid.n_phi() < kMinWehrlGridPhi)
        throw std::invalid_argument("sphere grid " + std::to_string(grid.n_theta()) + "x" +
                                    std::to_string(grid.n_phi()) +
                                    " is below the minimum resolution for Wehrl quadrature");
    const auto& nodes = grid.nodes();
    const auto& weights = grid.weights();
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        s -= weights[k] * x_log_x(atomic_q(b, nodes[k].theta, nodes[k].phi));
    return s;
}

double wehrl_closed_form_revival(double rho_z0)
{
    const double p = std::abs(rho_z0);
    if (!(p < 1.0))
        throw std::domain_error("closed-form Wehrl entropy needs |rho_z0| < 1");
    if (p == 0.0)
        return std::log(kFourPi);
    // (1+p^2)/(4p) ln((1-p)/(1+p)) rewritten with atanh to stay accurate near p = 0.
    const double log_ratio_term = -(1.0 + p * p) * std::atanh(p) / (2.0 * p);
    return 0.5 + std::log(kFourPi) + log_ratio_term - 0.5 * std::log1p(-p * p);
}

double wehrl_pure_state() { return 0.5 + std::log(2.0 * std::numbers::pi); }

double wehrl_maximally_mixed() { return std::log(kFourPi); }

} // namespace tjcm
