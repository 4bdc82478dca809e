// dynamics.hpp - closed-form amplitudes of the dressed two-mode wavefunction.
//
// Block n couples |up,n,n> (amplitude f1[n]) with |down,n+1,n+1> (f2[n]).
// The Kerr phase exp(-2i eta T n^2) common to both members of a block is not
// stored; observables that need it re-apply it explicitly.

#pragma once

#include "tjcm/model.hpp"

#include <complex>
#include <vector>

namespace tjcm {

using cplx = std::complex<double>;

struct AmplitudeTable {
    double t_scaled = 0.0;
    std::vector<cplx> f1;
    std::vector<cplx> f2;

    std::size_t size() const { return f1.size(); }
    /// sum_n |f1|^2 + |f2|^2
    double norm_squared() const;
};

AmplitudeTable evolve(const ModelParams& params, const TmsCoefficients& coeffs, double t_scaled);

/// Product state reached at T = m*pi when eta = 0, built without evolving.
/// Throws std::invalid_argument for eta != 0.
AmplitudeTable special_state_t_mpi(const ModelParams& params, const TmsCoefficients& coeffs, int m);

/// Stationary-atom state for (theta, phi, eta) = (pi/2, 0, 0):
/// f1[n] = f2[n] = C_n e^{-i(n+1)T} / sqrt(2).
/// Throws std::invalid_argument outside that condition (tolerance 1e-12).
AmplitudeTable trapped_state(const ModelParams& params, const TmsCoefficients& coeffs, double t_scaled);

bool is_trapping_condition(const ModelParams& params, double tol = 1e-12);

} // namespace tjcm
