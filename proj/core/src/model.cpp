#include "tjcm/model.hpp"

#include "tjcm/error.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tjcm {

namespace {

// 1/cosh r written with e^{-r} so it stays finite for large r.
double sech(double r)
{
    const double e = std::exp(-r);
    return 2.0 * e / (1.0 + e * e);
}

} // namespace

void ModelParams::validate() const
{
    if (!std::isfinite(r) || !std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(eta))
        throw std::invalid_argument("model parameters must be finite");
    if (r < 0.0)
        throw std::invalid_argument("squeeze parameter r must be >= 0");
    if (eta < 0.0)
        throw std::invalid_argument("Kerr ratio eta must be >= 0");
    if (n_trunc < 1)
        throw std::invalid_argument("Fock truncation must be >= 1");
}

double ModelParams::z() const { return std::tanh(r); }

double ModelParams::mean_photon_number() const
{
    const double s = std::sinh(r);
    return 2.0 * s * s;
}

double squeeze_from_sinh2(double sinh2r)
{
    if (!(sinh2r >= 0.0) || !std::isfinite(sinh2r))
        throw std::invalid_argument("sinh^2 r must be finite and >= 0");
    return std::asinh(std::sqrt(sinh2r));
}

ModelParams make_params(double r, double theta, double phi, double eta, double tail_tol)
{
    ModelParams p{r, theta, phi, eta, 1};
    p.validate();
    p.n_trunc = choose_truncation(r, tail_tol);
    return p;
}

double TmsCoefficients::norm_squared() const
{
    return std::transform_reduce(c_.begin(), c_.end(), 0.0, std::plus<>{},
                                 [](double c) { return c * c; });
}

TmsCoefficients tms_coefficients(const ModelParams& params)
{
    params.validate();
    const double z = params.z();
    std::vector<double> c(params.n_trunc + 1);
    double v = sech(params.r);
    for (auto& cn : c) {
        cn = v;
        v *= z;
    }
    return TmsCoefficients(std::move(c));
}

double tail_mass(double r, std::size_t n_trunc)
{
    const double z2 = std::tanh(r) * std::tanh(r);
    return std::pow(z2, static_cast<double>(n_trunc + 1));
}

std::size_t choose_truncation(double r, double tail_tol, std::size_t cap)
{
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("squeeze parameter r must be finite and >= 0");
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::invalid_argument("tail tolerance must lie in (0, 1)");

    const double z = std::tanh(r);
    if (z == 0.0)
        return 1;
    if (z >= 1.0)
        throw CapacityError("squeeze parameter too large: tanh r rounds to 1");

    // Closed-form estimate, then settle the boundary against the exact tail.
    const double estimate = std::log(tail_tol) / (2.0 * std::log(z)) - 1.0;
    if (estimate > static_cast<double>(cap) + 1.0)
        throw CapacityError("truncation for r = " + std::to_string(r) + " exceeds cap of " +
                            std::to_string(cap) + " Fock states");
    std::size_t n = estimate < 1.0 ? 1 : static_cast<std::size_t>(std::ceil(estimate));
    while (n > 1 && tail_mass(r, n - 1) < tail_tol)
        --n;
    while (tail_mass(r, n) >= tail_tol)
        ++n;
    if (n > cap)
        throw CapacityError("truncation for r = " + std::to_string(r) + " exceeds cap of " +
                            std::to_string(cap) + " Fock states");
    return n;
}

double rabi_frequency(std::size_t n, double eta)
{
    const double nd = static_cast<double>(n);
    return std::sqrt(4.0 * eta * eta * nd * nd + (nd + 1.0) * (nd + 1.0));
}

} // namespace tjcm
