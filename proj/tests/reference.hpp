// reference.hpp - test-only reference computations, kept independent of the
// library code paths they check.

#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>

namespace tjcm::reference {

// Discarded probability of truncation N by direct summation of C_n^2.
inline double tail_by_summation(double r, std::size_t n_trunc, std::size_t extra = 20000)
{
    const double z = std::tanh(r);
    const double c0 = 1.0 / std::cosh(r);
    double s = 0.0;
    for (std::size_t n = n_trunc + extra; n > n_trunc; --n)
        s += std::pow(c0 * std::pow(z, static_cast<double>(n)), 2);
    return s;
}

// Smallest N >= 1 with the summed tail below tol.
inline std::size_t truncation_by_search(double r, double tol)
{
    std::size_t n = 1;
    while (tail_by_summation(r, n) >= tol)
        ++n;
    return n;
}

// Wehrl entropy of a Bloch vector of length p, integrated along the axis it
// points to: W = -2pi \int_{-1}^{1} q ln q du with q = (1 + p u) / 4pi.
inline double wehrl_by_axial_integral(double p)
{
    auto f = [p](double u) {
        const double q = (1.0 + p * u) / (4.0 * std::numbers::pi);
        return q > 0.0 ? -q * std::log(q) : 0.0;
    };
    return 2.0 * std::numbers::pi *
           boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -1.0, 1.0, 15, 1e-14);
}

// <S_z> for eta = 0 from a direct sum over the Rabi-flopping blocks:
// 1/2 sum_n C_n^2 [cos theta cos 2(n+1)T + sin theta sin phi sin 2(n+1)T].
inline double inversion_by_block_sum(double r, double theta, double phi, double t, std::size_t n_max)
{
    const double z = std::tanh(r);
    double s = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double c2 = std::pow(z, 2.0 * static_cast<double>(n)) / (std::cosh(r) * std::cosh(r));
        const double x = 2.0 * (static_cast<double>(n) + 1.0) * t;
        s += c2 * (std::cos(theta) * std::cos(x) + std::sin(theta) * std::sin(phi) * std::sin(x));
    }
    return 0.5 * s;
}

struct UniformBall {
    std::mt19937_64 rng;
    explicit UniformBall(std::uint64_t seed) : rng(seed) {}

    // (x, y, z) uniform in the unit ball
    template <class Vec>
    Vec draw()
    {
        std::normal_distribution<double> g;
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double x = g(rng), y = g(rng), zz = g(rng);
        const double len = std::sqrt(x * x + y * y + zz * zz);
        const double rad = std::cbrt(u(rng));
        return Vec{rad * x / len, rad * y / len, rad * zz / len};
    }
};

} // namespace tjcm::reference
