#include "tjcm/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tjcm {

double BlochVector::length() const { return std::sqrt(length_squared()); }

AtomDensityMatrix AtomDensityMatrix::from_bloch(const BlochVector& b)
{
    return AtomDensityMatrix{
        cplx{0.5 * (1.0 + b.rho_z), 0.0},
        cplx{0.5 * b.rho_x, -0.5 * b.rho_y},
        cplx{0.5 * b.rho_x, 0.5 * b.rho_y},
        cplx{0.5 * (1.0 - b.rho_z), 0.0},
    };
}

BlochVector AtomDensityMatrix::to_bloch() const
{
    return BlochVector{2.0 * down_up.real(), 2.0 * down_up.imag(), (up_up - down_down).real()};
}

double AtomDensityMatrix::purity() const
{
    return (up_up * up_up + up_down * down_up + down_up * up_down + down_down * down_down).real();
}

std::array<double, 2> AtomDensityMatrix::eigenvalues() const
{
    const double mean = 0.5 * (up_up.real() + down_down.real());
    const double half_diff = 0.5 * (up_up.real() - down_down.real());
    const double radius = std::hypot(half_diff, std::abs(up_down));
    return {mean - radius, mean + radius};
}

double AtomDensityMatrix::max_hermiticity_defect() const
{
    return std::max({std::abs(up_up.imag()), std::abs(down_down.imag()),
                     std::abs(up_down - std::conj(down_up))});
}

BlochVector bloch_vector(const AmplitudeTable& table, double eta)
{
    const std::size_t size = table.size();
    const double t = table.t_scaled;
    double rho_z = 0.0;
    cplx coherence{0.0, 0.0};
    for (std::size_t n = 0; n < size; ++n) {
        rho_z += std::norm(table.f1[n]) - std::norm(table.f2[n]);
        if (n + 1 < size) {
            const double phase = 2.0 * eta * t * (2.0 * static_cast<double>(n) + 1.0);
            coherence += std::polar(1.0, phase) * std::conj(table.f1[n + 1]) * table.f2[n];
        }
    }
    coherence *= 2.0;
    return BlochVector{coherence.real(), coherence.imag(), rho_z};
}

AtomDensityMatrix reduced_density(const AmplitudeTable& table, double eta)
{
    return AtomDensityMatrix::from_bloch(bloch_vector(table, eta));
}

double inversion_closed_form(const ModelParams& params, double t_scaled)
{
    params.validate();
    if (params.eta != 0.0)
        throw std::invalid_argument("closed-form inversion requires eta = 0");

    // sum_n C_n^2 e^{2i(n+1)T} = sech^2 r * (e^{2iT} - z^2) / |1 - z^2 e^{2iT}|^2
    const double z = params.z();
    const double z2 = z * z;
    const double c2 = std::cos(2.0 * t_scaled);
    const double s2 = std::sin(2.0 * t_scaled);
    const double denom = (1.0 - z2 * c2) * (1.0 - z2 * c2) + z2 * z2 * s2 * s2;
    const double sech2 = 1.0 - z2;
    const double num = (c2 - z2) * std::cos(params.theta) +
                       std::sin(params.theta) * std::sin(params.phi) * s2;
    return num * sech2 / (2.0 * denom);
}

double linear_entropy(const BlochVector& b)
{
    return std::max(0.0, 0.5 * (1.0 - b.length_squared()));
}

double von_neumann_entropy(const BlochVector& b)
{
    const double len = std::min(1.0, b.length());
    double s = 0.0;
    for (const double lambda : {0.5 * (1.0 + len), 0.5 * (1.0 - len)}) {
        if (lambda > 0.0)
            s -= lambda * std::log(lambda);
    }
    return s;
}

} // namespace tjcm
