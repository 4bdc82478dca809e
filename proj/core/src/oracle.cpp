#include "tjcm/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <stdexcept>

namespace tjcm {

CoupledBasis::CoupledBasis(std::size_t n_trunc) : n_trunc_(n_trunc)
{
    labels_.reserve(2 * n_trunc + 3);
    labels_.push_back({AtomLevel::down, 0});
    for (std::size_t n = 0; n <= n_trunc; ++n) {
        labels_.push_back({AtomLevel::up, n});
        labels_.push_back({AtomLevel::down, n + 1});
    }
}

long CoupledBasis::block_of(std::size_t index)
{
    return index == 0 ? -1 : static_cast<long>((index - 1) / 2);
}

std::array<double, 2> Block2x2::eigenvalues() const
{
    const double half_diff = 0.5 * (up_diag - down_diag);
    const double radius = std::hypot(half_diff, coupling);
    return {mean() - radius, mean() + radius};
}

namespace {

// <n,n| (a1^+2 a1^2 + a2^+2 a2^2) |n,n> = 2 n (n-1)
double kerr_energy(std::size_t photons, double eta)
{
    const double k = static_cast<double>(photons);
    return 2.0 * eta * k * (k - 1.0);
}

// <up,k,k| a1 a2 S+ |down,k+1,k+1> = k + 1
double coupling_element(std::size_t up_photons) { return static_cast<double>(up_photons) + 1.0; }

Eigen::MatrixXd assemble_dense(const CoupledBasis& basis, double eta)
{
    const auto& labels = basis.labels();
    const Eigen::Index dim = static_cast<Eigen::Index>(labels.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const BasisLabel& li = labels[static_cast<std::size_t>(i)];
        h(i, i) = kerr_energy(li.photons, eta);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const BasisLabel& lj = labels[static_cast<std::size_t>(j)];
            if (li.level == AtomLevel::up && lj.level == AtomLevel::down &&
                lj.photons == li.photons + 1) {
                h(i, j) = coupling_element(li.photons);
                h(j, i) = h(i, j);
            }
        }
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (h(i, j) != 0.0 && CoupledBasis::block_of(static_cast<std::size_t>(i)) !=
                                      CoupledBasis::block_of(static_cast<std::size_t>(j)))
                throw std::logic_error("interaction Hamiltonian couples distinct blocks");
        }
    }
    return h;
}

std::vector<cplx> evolve_blocks(const BlockHamiltonian& h, const std::vector<cplx>& psi0, double t)
{
    const cplx i{0.0, 1.0};
    std::vector<cplx> psi(psi0.size());
    // |down,0,0> carries zero interaction energy.
    psi[CoupledBasis::ground_index()] = psi0[CoupledBasis::ground_index()];
    for (std::size_t n = 0; n < h.blocks.size(); ++n) {
        const Block2x2& b = h.blocks[n];
        const double hz = 0.5 * (b.up_diag - b.down_diag);
        const double hx = b.coupling;
        const double w = std::hypot(hz, hx);
        const double c = std::cos(t * w);
        const double s = std::sin(t * w) / w;
        const cplx global = std::polar(1.0, -t * b.mean());
        const cplx up = psi0[CoupledBasis::up_index(n)];
        const cplx down = psi0[CoupledBasis::down_index(n)];
        // exp(-i t (hz sz + hx sx)) = cos(tw) - i sin(tw)/w (hz sz + hx sx)
        psi[CoupledBasis::up_index(n)] = global * (c * up - i * s * (hz * up + hx * down));
        psi[CoupledBasis::down_index(n)] = global * (c * down - i * s * (hx * up - hz * down));
    }
    return psi;
}

std::vector<cplx> evolve_dense(const CoupledBasis& basis, double eta, const std::vector<cplx>& psi0,
                               double t)
{
    const Eigen::MatrixXd h = assemble_dense(basis, eta);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition of the interaction Hamiltonian failed");

    const Eigen::Index dim = h.rows();
    Eigen::VectorXcd v(dim);
    for (Eigen::Index k = 0; k < dim; ++k)
        v(k) = psi0[static_cast<std::size_t>(k)];
    const Eigen::MatrixXcd vecs = solver.eigenvectors().cast<cplx>();
    Eigen::VectorXcd coeff = vecs.adjoint() * v;
    for (Eigen::Index k = 0; k < dim; ++k)
        coeff(k) *= std::polar(1.0, -t * solver.eigenvalues()(k));
    const Eigen::VectorXcd out = vecs * coeff;
    return std::vector<cplx>(out.data(), out.data() + dim);
}

} // namespace

BlockHamiltonian block_hamiltonian(std::size_t n_trunc, double eta)
{
    BlockHamiltonian h;
    h.blocks.reserve(n_trunc + 1);
    for (std::size_t n = 0; n <= n_trunc; ++n)
        h.blocks.push_back({kerr_energy(n, eta), kerr_energy(n + 1, eta), coupling_element(n)});
    return h;
}

double FullState::norm_squared() const
{
    double s = 0.0;
    for (const auto& a : amplitudes)
        s += std::norm(a);
    return s;
}

FullState initial_full_state(const ModelParams& params)
{
    params.validate();
    FullState state{CoupledBasis(params.n_trunc), {}};
    state.amplitudes.assign(state.basis.size(), cplx{0.0, 0.0});

    const double z = std::tanh(params.r);
    const double up = std::cos(params.theta / 2.0);
    const cplx down = std::polar(std::sin(params.theta / 2.0), params.phi);
    for (std::size_t n = 0; n <= params.n_trunc; ++n) {
        const double c = std::pow(z, static_cast<double>(n)) / std::cosh(params.r);
        state.amplitudes[CoupledBasis::up_index(n)] = c * up;
        state.amplitudes[CoupledBasis::down_index(n)] = c * down;
    }
    return state;
}

FullState brute_force_state(const ModelParams& params, double t_scaled, OracleMethod method)
{
    FullState state = initial_full_state(params);
    if (method == OracleMethod::dense)
        state.amplitudes = evolve_dense(state.basis, params.eta, state.amplitudes, t_scaled);
    else
        state.amplitudes =
            evolve_blocks(block_hamiltonian(params.n_trunc, params.eta), state.amplitudes, t_scaled);
    return state;
}

AmplitudeTable brute_force_evolve(const ModelParams& params, double t_scaled, OracleMethod method)
{
    const FullState state = brute_force_state(params, t_scaled, method);
    const BlockHamiltonian h = block_hamiltonian(params.n_trunc, params.eta);

    AmplitudeTable out;
    out.t_scaled = t_scaled;
    out.f1.resize(params.n_trunc + 1);
    out.f2.resize(params.n_trunc + 1);
    for (std::size_t n = 0; n <= params.n_trunc; ++n) {
        const cplx unphase = std::polar(1.0, t_scaled * h.blocks[n].mean());
        out.f1[n] = unphase * state.amplitudes[CoupledBasis::up_index(n)];
        out.f2[n] = unphase * state.amplitudes[CoupledBasis::down_index(n)];
    }
    return out;
}

AtomDensityMatrix partial_trace(const FullState& state)
{
    // Field label -> (amplitude with atom up, amplitude with atom down).
    std::map<std::size_t, std::array<cplx, 2>> by_field;
    const auto& labels = state.basis.labels();
    for (std::size_t k = 0; k < labels.size(); ++k) {
        auto& slot = by_field[labels[k].photons];
        slot[labels[k].level == AtomLevel::up ? 0 : 1] += state.amplitudes[k];
    }
    AtomDensityMatrix rho{};
    for (const auto& [photons, amp] : by_field) {
        rho.up_up += amp[0] * std::conj(amp[0]);
        rho.up_down += amp[0] * std::conj(amp[1]);
        rho.down_up += amp[1] * std::conj(amp[0]);
        rho.down_down += amp[1] * std::conj(amp[1]);
    }
    return rho;
}

AtomDensityMatrix brute_force_reduced_density(const ModelParams& params, double t_scaled,
                                              OracleMethod method)
{
    return partial_trace(brute_force_state(params, t_scaled, method));
}

} // namespace tjcm
