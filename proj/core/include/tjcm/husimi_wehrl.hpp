// husimi_wehrl.hpp - atomic Husimi Q-function on the Bloch sphere and the
// atomic Wehrl entropy.
//
// Q_a(Theta, Phi) = (1/4pi) {1 + rho_z cos Theta + [rho_x cos Phi + rho_y sin Phi] sin Theta}
// is normalized against the surface measure sin Theta dTheta dPhi. The
// unnormalized 1/2pi prefactor sometimes quoted for the coherent-state overlap
// is not used.

#pragma once

#include "tjcm/observables.hpp"

#include <cstddef>
#include <vector>

namespace tjcm {

inline constexpr std::size_t kDefaultGridTheta = 128;
inline constexpr std::size_t kDefaultGridPhi = 256;
inline constexpr std::size_t kMinWehrlGridTheta = 16;
inline constexpr std::size_t kMinWehrlGridPhi = 8;

struct SpherePoint {
    double theta;
    double phi;
};

/// Product rule: Gauss-Legendre in cos Theta times the uniform trapezoid in Phi.
/// Weights include the sin Theta Jacobian and sum to 4pi.
class SphereGrid {
public:
    SphereGrid(std::size_t n_theta, std::size_t n_phi);

    std::size_t n_theta() const { return n_theta_; }
    std::size_t n_phi() const { return n_phi_; }
    std::size_t size() const { return nodes_.size(); }

    const std::vector<SpherePoint>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    /// sum_k w_k f_k for values sampled at nodes().
    double integrate(const std::vector<double>& values) const;

private:
    std::size_t n_theta_;
    std::size_t n_phi_;
    std::vector<SpherePoint> nodes_;  // theta-major: index = i_theta * n_phi + i_phi
    std::vector<double> weights_;
};

inline SphereGrid default_sphere_grid() { return SphereGrid(kDefaultGridTheta, kDefaultGridPhi); }

double atomic_q(const BlochVector& b, double theta_c, double phi_c);

struct QFunctionField {
    std::vector<double> values;  // one per grid node, same order
};

QFunctionField q_function(const BlochVector& b, const SphereGrid& grid);

/// W_a = -\oint Q_a ln Q_a dOmega by quadrature; x ln x -> 0 at Q_a = 0.
/// Throws std::invalid_argument when the grid is coarser than
/// kMinWehrlGridTheta x kMinWehrlGridPhi.
double wehrl_entropy(const BlochVector& b, const SphereGrid& grid);

/// Exact W_a for a Bloch vector (0, 0, rho_z0), |rho_z0| < 1. Returns ln(4pi)
/// at rho_z0 = 0. Throws std::domain_error for |rho_z0| >= 1; the limit there
/// is wehrl_pure_state().
double wehrl_closed_form_revival(double rho_z0);

/// W_a of any pure atomic state: 1/2 + ln(2pi).
double wehrl_pure_state();

/// W_a of the maximally mixed state: ln(4pi).
double wehrl_maximally_mixed();

} // namespace tjcm
