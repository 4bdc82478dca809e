// model.hpp - physical parameters, two-mode squeezed vacuum coefficients and
// the Kerr-modified Rabi frequency of the two-mode Jaynes-Cummings model.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tjcm {

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr std::size_t kMaxTruncation = 10000;

/// Physical inputs of one run.
///
/// The atom starts in cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>, the
/// two modes in the squeezed vacuum with parameter r. eta is the Kerr
/// nonlinearity measured in units of the atom-field coupling. Fock states
/// |n,n> are kept for n = 0..n_trunc.
struct ModelParams {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double eta = 0.0;
    std::size_t n_trunc = 1;

    /// Throws std::invalid_argument on negative r or eta, n_trunc == 0 or
    /// non-finite values.
    void validate() const;

    double z() const;                   // tanh r
    double mean_photon_number() const;  // 2 sinh^2 r, both modes together
};

/// Squeeze parameter from sinh^2 r, the figures' parameterization.
double squeeze_from_sinh2(double sinh2r);

/// Builds parameters with n_trunc chosen by choose_truncation(r, tail_tol).
ModelParams make_params(double r, double theta, double phi, double eta,
                        double tail_tol = kDefaultTailTol);

class TmsCoefficients {
public:
    TmsCoefficients() = default;
    explicit TmsCoefficients(std::vector<double> c) : c_(std::move(c)) {}

    std::span<const double> values() const { return c_; }
    double operator[](std::size_t n) const { return c_[n]; }
    std::size_t size() const { return c_.size(); }
    double norm_squared() const;

private:
    std::vector<double> c_;
};

/// C_n = tanh(r)^n / cosh(r) for n = 0..params.n_trunc.
TmsCoefficients tms_coefficients(const ModelParams& params);

/// Smallest N >= 1 whose discarded tail sum_{n>N} C_n^2 = tanh(r)^{2(N+1)}
/// is below tail_tol. Throws CapacityError past kMaxTruncation.
std::size_t choose_truncation(double r, double tail_tol = kDefaultTailTol,
                              std::size_t cap = kMaxTruncation);

/// Discarded probability for truncation N; exact geometric tail.
double tail_mass(double r, std::size_t n_trunc);

/// Omega_n = sqrt(4 eta^2 n^2 + (n+1)^2).
double rabi_frequency(std::size_t n, double eta);

} // namespace tjcm
