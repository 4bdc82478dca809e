// observables.hpp - reduced atomic state and the entanglement measures built
// on it.

#pragma once

#include "tjcm/dynamics.hpp"
#include "tjcm/model.hpp"

#include <array>
#include <complex>

namespace tjcm {

/// Twice the atomic spin expectation values: rho_i = 2 <S_i>.
struct BlochVector {
    double rho_x = 0.0;
    double rho_y = 0.0;
    double rho_z = 0.0;

    double length() const;
    double length_squared() const { return rho_x * rho_x + rho_y * rho_y + rho_z * rho_z; }
};

/// 2x2 atomic density matrix in the {|up>, |down>} basis.
struct AtomDensityMatrix {
    cplx up_up;
    cplx up_down;
    cplx down_up;
    cplx down_down;

    static AtomDensityMatrix from_bloch(const BlochVector& b);
    BlochVector to_bloch() const;

    cplx trace() const { return up_up + down_down; }
    double purity() const;  // Tr rho^2
    /// Ascending eigenvalues; exact for a Hermitian 2x2.
    std::array<double, 2> eigenvalues() const;
    double max_hermiticity_defect() const;
};

/// rho_z = sum |F1|^2 - |F2|^2,
/// rho_x + i rho_y = 2 sum_n e^{2i eta T (2n+1)} conj(F1[n+1]) F2[n],
/// with F1[N+1] taken as zero.
BlochVector bloch_vector(const AmplitudeTable& table, double eta);

AtomDensityMatrix reduced_density(const AmplitudeTable& table, double eta);

/// <S_z> = rho_z / 2, in [-1/2, 1/2].
inline double atomic_inversion(const BlochVector& b) { return 0.5 * b.rho_z; }

/// Closed form of <S_z>(T) for eta = 0 (geometric resummation of the
/// amplitude series). Throws std::invalid_argument for eta != 0.
double inversion_closed_form(const ModelParams& params, double t_scaled);

/// xi = 1 - Tr rho^2 = (1 - |rho|^2) / 2, in [0, 1/2].
double linear_entropy(const BlochVector& b);

/// S = -sum lambda ln lambda with lambda = (1 +- |rho|)/2, 0 ln 0 = 0.
double von_neumann_entropy(const BlochVector& b);

} // namespace tjcm
