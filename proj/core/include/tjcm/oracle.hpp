// oracle.hpp - brute-force reference for the analytic dynamics.
//
// The interaction Hamiltonian is assembled from its matrix elements on the
// coupled basis and exponentiated directly; no closed-form amplitude is used.
// At resonance the free Hamiltonian is constant on every block, so its phase
// is dropped.

#pragma once

#include "tjcm/dynamics.hpp"
#include "tjcm/model.hpp"
#include "tjcm/observables.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tjcm {

enum class AtomLevel { up, down };

/// |level, photons, photons>
struct BasisLabel {
    AtomLevel level;
    std::size_t photons;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Ordering: |down,0,0>, then |up,n,n>, |down,n+1,n+1> for n = 0..N.
class CoupledBasis {
public:
    explicit CoupledBasis(std::size_t n_trunc);

    std::size_t n_trunc() const { return n_trunc_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    static constexpr std::size_t ground_index() { return 0; }
    static constexpr std::size_t up_index(std::size_t n) { return 2 * n + 1; }
    static constexpr std::size_t down_index(std::size_t n) { return 2 * n + 2; }
    /// Block id of a basis index: -1 for |down,0,0>, otherwise n.
    static long block_of(std::size_t index);

private:
    std::size_t n_trunc_;
    std::vector<BasisLabel> labels_;
};

/// H_n / lambda on {|up,n,n>, |down,n+1,n+1>}.
struct Block2x2 {
    double up_diag;    // 2 eta n (n-1)
    double down_diag;  // 2 eta n (n+1)
    double coupling;   // n + 1

    double mean() const { return 0.5 * (up_diag + down_diag); }
    /// Ascending eigenvalues.
    std::array<double, 2> eigenvalues() const;
};

struct BlockHamiltonian {
    std::vector<Block2x2> blocks;
};

BlockHamiltonian block_hamiltonian(std::size_t n_trunc, double eta);

enum class OracleMethod {
    block,  // analytic 2x2 exponentials block by block
    dense,  // eigendecomposition of the full (2N+3)-dimensional matrix
};

struct FullState {
    CoupledBasis basis;
    std::vector<cplx> amplitudes;

    double norm_squared() const;
};

/// Initial state on the coupled basis: block vector (C_n cos, C_n e^{i phi} sin).
FullState initial_full_state(const ModelParams& params);

FullState brute_force_state(const ModelParams& params, double t_scaled,
                            OracleMethod method = OracleMethod::block);

/// Amplitudes with each block's mean-energy phase removed, comparable
/// componentwise with evolve().
AmplitudeTable brute_force_evolve(const ModelParams& params, double t_scaled,
                                  OracleMethod method = OracleMethod::block);

/// Explicit partial trace of the full state over the two-mode labels.
AtomDensityMatrix partial_trace(const FullState& state);

AtomDensityMatrix brute_force_reduced_density(const ModelParams& params, double t_scaled,
                                              OracleMethod method = OracleMethod::block);

} // namespace tjcm
