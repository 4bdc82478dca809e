#include "tjcm/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tjcm {

namespace {

void check_consistent(const ModelParams& params, const TmsCoefficients& coeffs)
{
    params.validate();
    if (coeffs.size() != params.n_trunc + 1)
        throw std::invalid_argument("coefficient table does not match the Fock truncation");
}

// e^{i k pi} for integer k, exactly.
double parity_sign(long long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

} // namespace

double AmplitudeTable::norm_squared() const
{
    double s = 0.0;
    for (std::size_t n = 0; n < f1.size(); ++n)
        s += std::norm(f1[n]) + std::norm(f2[n]);
    return s;
}

AmplitudeTable evolve(const ModelParams& params, const TmsCoefficients& coeffs, double t_scaled)
{
    check_consistent(params, coeffs);
    if (!std::isfinite(t_scaled))
        throw std::invalid_argument("scaled time must be finite");

    const cplx i{0.0, 1.0};
    const double ch = std::cos(params.theta / 2.0);
    const cplx sh = std::polar(std::sin(params.theta / 2.0), params.phi);

    AmplitudeTable out;
    out.t_scaled = t_scaled;
    out.f1.resize(coeffs.size());
    out.f2.resize(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const double c = coeffs[n];
        const double nd = static_cast<double>(n);
        const double omega = rabi_frequency(n, params.eta);
        const double co = std::cos(t_scaled * omega);
        const double so = std::sin(t_scaled * omega) / omega;
        const double kerr = 2.0 * params.eta * nd;
        out.f1[n] = c * ch * co + i * c * (kerr * ch - (nd + 1.0) * sh) * so;
        out.f2[n] = c * sh * co - i * c * (kerr * sh + (nd + 1.0) * ch) * so;
    }
    return out;
}

AmplitudeTable special_state_t_mpi(const ModelParams& params, const TmsCoefficients& coeffs, int m)
{
    check_consistent(params, coeffs);
    if (params.eta != 0.0)
        throw std::invalid_argument("the T = m*pi product form requires eta = 0");

    const double ch = std::cos(params.theta / 2.0);
    // Atomic ground coefficient carries e^{i(phi - m pi)}; F2(n) lives on the
    // |n+1,n+1> field label, whose phase is e^{i m (n+2) pi}.
    const cplx sh = std::polar(std::sin(params.theta / 2.0), params.phi) * parity_sign(m);

    AmplitudeTable out;
    out.t_scaled = m * std::numbers::pi;
    out.f1.resize(coeffs.size());
    out.f2.resize(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const long long k = static_cast<long long>(n);
        out.f1[n] = coeffs[n] * parity_sign(m * (k + 1)) * ch;
        out.f2[n] = coeffs[n] * parity_sign(m * (k + 2)) * sh;
    }
    return out;
}

bool is_trapping_condition(const ModelParams& params, double tol)
{
    return std::abs(params.theta - std::numbers::pi / 2.0) <= tol && std::abs(params.phi) <= tol &&
           params.eta <= tol;
}

AmplitudeTable trapped_state(const ModelParams& params, const TmsCoefficients& coeffs, double t_scaled)
{
    check_consistent(params, coeffs);
    if (!is_trapping_condition(params))
        throw std::invalid_argument("trapped state requires (theta, phi, eta) = (pi/2, 0, 0)");

    AmplitudeTable out;
    out.t_scaled = t_scaled;
    out.f1.resize(coeffs.size());
    out.f2.resize(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const cplx a = std::polar(coeffs[n] / std::numbers::sqrt2,
                                  -(static_cast<double>(n) + 1.0) * t_scaled);
        out.f1[n] = a;
        out.f2[n] = a;
    }
    return out;
}

} // namespace tjcm
