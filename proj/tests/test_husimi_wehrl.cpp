#include "reference.hpp"

#include "tjcm/husimi_wehrl.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace tjcm;

namespace {
constexpr double kPi = std::numbers::pi;
const SphereGrid& grid()
{
    static const SphereGrid g = default_sphere_grid();
    return g;
}
} // namespace

TEST_CASE("sphere grid weights")
{
    for (const auto& [nt, np] : {std::pair<std::size_t, std::size_t>{128, 256}, {17, 8}, {16, 9}, {1, 1}}) {
        const SphereGrid g(nt, np);
        CHECK(g.size() == nt * np);
        double total = 0.0;
        for (const double w : g.weights()) {
            CHECK(w > 0.0);
            total += w;
        }
        CHECK(total == doctest::Approx(4 * kPi).epsilon(1e-13));
        CHECK(g.integrate(std::vector<double>(g.size(), 1.0 / (4 * kPi))) == doctest::Approx(1.0).epsilon(1e-13));
        for (const auto& p : g.nodes()) {
            CHECK(p.theta > 0.0);
            CHECK(p.theta < kPi);
            CHECK(p.phi >= 0.0);
            CHECK(p.phi < 2 * kPi);
        }
    }
    CHECK_THROWS_AS(SphereGrid(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(grid().integrate({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("atomic_q")
{
    SUBCASE("maximally mixed is uniform")
    {
        for (const auto& p : SphereGrid(8, 8).nodes())
            CHECK(atomic_q({0, 0, 0}, p.theta, p.phi) == doctest::Approx(1.0 / (4 * kPi)));
    }
    SUBCASE("revival of the excited atom is independent of Phi")
    {
        const ModelParams m = make_params(squeeze_from_sinh2(10.0), 0.0, 0.0, 0.0);
        const BlochVector b = bloch_vector(evolve(m, tms_coefficients(m), kPi), 0.0);
        for (const double th : {0.1, 1.0, 2.0, 3.0})
            for (const double ph : {0.0, 1.0, 4.0})
                CHECK(atomic_q(b, th, ph) == doctest::Approx((1 + std::cos(th)) / (4 * kPi)).epsilon(1e-10));
    }
    SUBCASE("antipodal points sum to 1/(2 pi)")
    {
        reference::UniformBall ball(9);
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int k = 0; k < 200; ++k) {
            const BlochVector b = ball.draw<BlochVector>();
            const double th = kPi * u(rng), ph = 2 * kPi * u(rng);
            CHECK(atomic_q(b, th, ph) + atomic_q(b, kPi - th, ph + kPi) ==
                  doctest::Approx(1.0 / (2 * kPi)).epsilon(1e-14));
        }
    }
    SUBCASE("non-negative and normalized on the grid")
    {
        reference::UniformBall ball(12);
        for (int k = 0; k < 100; ++k) {
            const QFunctionField q = q_function(ball.draw<BlochVector>(), grid());
            CHECK(*std::min_element(q.values.begin(), q.values.end()) >= -1e-14);
            CHECK(std::abs(grid().integrate(q.values) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("wehrl_entropy")
{
    CHECK(std::abs(wehrl_entropy({0, 0, 0}, grid()) - std::log(4 * kPi)) < 1e-12);
    CHECK(std::abs(wehrl_entropy({0, 0, 1}, grid()) - 2.337877066409345) < 1e-6);
    CHECK(std::abs(wehrl_entropy({0, 0, -1}, grid()) - wehrl_pure_state()) < 1e-6);
    CHECK(wehrl_pure_state() == doctest::Approx(0.5 + std::log(2 * kPi)));
    CHECK(wehrl_maximally_mixed() == doctest::Approx(2.53102424697).epsilon(1e-11));

    SUBCASE("depends only on the length of the Bloch vector")
    {
        reference::UniformBall ball(21);
        for (int k = 0; k < 100; ++k) {
            const BlochVector b = ball.draw<BlochVector>();
            CHECK(std::abs(wehrl_entropy(b, grid()) - wehrl_entropy({0, 0, b.length()}, grid())) < 1e-10);
        }
    }
    SUBCASE("bounds and monotonicity in |rho|")
    {
        double previous = wehrl_entropy({0, 0, 0}, grid());
        for (int i = 1; i <= 100; ++i) {
            const double w = wehrl_entropy({0, i / 100.0, 0}, grid());
            CHECK(w < previous);
            CHECK(w >= 2.337877 - 1e-6);
            CHECK(w <= std::log(4 * kPi) + 1e-6);
            previous = w;
        }
    }
    SUBCASE("converged at the default resolution")
    {
        const SphereGrid fine(2 * kDefaultGridTheta, 2 * kDefaultGridPhi);
        reference::UniformBall ball(33);
        for (int k = 0; k < 20; ++k) {
            const BlochVector b = ball.draw<BlochVector>();
            CHECK(std::abs(wehrl_entropy(b, grid()) - wehrl_entropy(b, fine)) < 1e-8);
        }
        for (const double p : {0.5, 0.9, 0.99})
            CHECK(std::abs(wehrl_entropy({0, 0, p}, grid()) - wehrl_entropy({0, 0, p}, fine)) < 1e-8);
    }
    SUBCASE("agrees with an adaptive axial integral")
    {
        for (const double p : {0.0, 0.05, 0.3, 0.7, 0.95, 1.0})
            CHECK(std::abs(wehrl_entropy({p, 0, 0}, grid()) - reference::wehrl_by_axial_integral(p)) < 1e-8);
    }
    SUBCASE("coarse grids are rejected")
    {
        CHECK_THROWS_AS(wehrl_entropy({0, 0, 0}, SphereGrid(8, 64)), std::invalid_argument);
        CHECK_THROWS_AS(wehrl_entropy({0, 0, 0}, SphereGrid(64, 4)), std::invalid_argument);
    }
}

TEST_CASE("wehrl_closed_form_revival")
{
    CHECK(wehrl_closed_form_revival(0.0) == std::log(4 * kPi));
    CHECK(wehrl_closed_form_revival(1e-9) == doctest::Approx(std::log(4 * kPi)).epsilon(1e-15));
    for (int i = 1; i <= 9; ++i) {
        const double p = i / 10.0;
        CHECK(std::abs(wehrl_closed_form_revival(p) - wehrl_entropy({0, 0, p}, grid())) < 1e-8);
        CHECK(wehrl_closed_form_revival(-p) == doctest::Approx(wehrl_closed_form_revival(p)).epsilon(1e-15));
        CHECK(std::abs(wehrl_closed_form_revival(p) - reference::wehrl_by_axial_integral(p)) < 1e-12);
    }
    // Approaches the pure-state value; both log divergences cancel.
    CHECK(std::abs(wehrl_closed_form_revival(1.0 - 1e-9) - wehrl_pure_state()) < 1e-6);
    // 2.488 is reached at half polarization, not in the pure limit.
    CHECK(wehrl_closed_form_revival(0.5) == doctest::Approx(2.488).epsilon(1e-4));
    CHECK_THROWS_AS(wehrl_closed_form_revival(1.0), std::domain_error);
    CHECK_THROWS_AS(wehrl_closed_form_revival(-1.5), std::domain_error);
}
