#include "reference.hpp"

#include "tjcm/error.hpp"
#include "tjcm/model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tjcm;

namespace {
const double kFigureR = squeeze_from_sinh2(10.0);
}

TEST_CASE("vacuum squeeze puts all weight on n = 0")
{
    const ModelParams p{0.0, 0.0, 0.0, 0.0, 5};
    const TmsCoefficients c = tms_coefficients(p);
    REQUIRE(c.size() == 6);
    CHECK(c[0] == 1.0);
    for (std::size_t n = 1; n < c.size(); ++n)
        CHECK(c[n] == 0.0);
}

TEST_CASE("ground coefficient at sinh^2 r = 10 is 1/sqrt(11)")
{
    const TmsCoefficients c = tms_coefficients({kFigureR, 0.0, 0.0, 0.0, 3});
    CHECK(c[0] == doctest::Approx(0.3015113445777636).epsilon(1e-14));
    CHECK(c[1] / c[0] == doctest::Approx(std::tanh(kFigureR)).epsilon(1e-14));
}

TEST_CASE("mean photon number is 2 sinh^2 r")
{
    const ModelParams p{kFigureR, 0.0, 0.0, 0.0, 1};
    CHECK(p.mean_photon_number() == doctest::Approx(20.0).epsilon(1e-13));
}

TEST_CASE("choose_truncation")
{
    SUBCASE("vacuum needs one level")
    {
        CHECK(choose_truncation(0.0, 1e-12) == 1);
        CHECK(choose_truncation(0.0, 0.5) == 1);
    }
    SUBCASE("figure squeeze, frozen from an extended-precision tail sum")
    {
        CHECK(choose_truncation(kFigureR, 1e-12) == 289);
        CHECK(choose_truncation(2.0, 1e-12) == 377);
    }
    SUBCASE("agrees with direct summation of the discarded tail")
    {
        for (const double r : {0.1, 0.5, 1.0, 1.5})
            for (const double tol : {1e-6, 1e-9, 1e-12})
                CHECK(choose_truncation(r, tol) == reference::truncation_by_search(r, tol));
    }
    SUBCASE("capacity and argument errors")
    {
        CHECK_THROWS_AS(choose_truncation(20.0, 1e-12), CapacityError);
        CHECK_THROWS_AS(choose_truncation(14.0, 1e-12), CapacityError);
        CHECK_THROWS_AS(choose_truncation(2.0, 1e-12, 100), CapacityError);
        CHECK_THROWS_AS(choose_truncation(1.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(choose_truncation(1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(choose_truncation(-0.1, 1e-6), std::invalid_argument);
    }
}

TEST_CASE("retained norm is within the tail tolerance of one")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> r_dist(0.0, 2.5);
    for (int k = 0; k < 200; ++k) {
        const double r = r_dist(rng);
        const double tol = std::pow(10.0, -3.0 - 9.0 * std::uniform_real_distribution<double>(0, 1)(rng));
        const ModelParams p = make_params(r, 0.0, 0.0, 0.0, tol);
        const double norm = tms_coefficients(p).norm_squared();
        CHECK(norm <= 1.0 + 1e-14);
        CHECK(norm >= 1.0 - tol);
        CHECK(tail_mass(r, p.n_trunc) < tol);
        CHECK(std::abs((1.0 - norm) - tail_mass(r, p.n_trunc)) < 1e-14);
    }
}

TEST_CASE("rabi_frequency")
{
    for (std::size_t n = 0; n < 50; ++n)
        CHECK(rabi_frequency(n, 0.0) == static_cast<double>(n + 1));
    for (const double eta : {0.0, 0.03, 1.0, 7.5})
        CHECK(rabi_frequency(0, eta) == 1.0);
    CHECK(rabi_frequency(2, 0.03) == doctest::Approx(3.002399040767233).epsilon(1e-14));

    for (const double eta : {0.0, 0.01, 0.03, 0.5}) {
        for (std::size_t n = 0; n < 500; ++n) {
            CHECK(rabi_frequency(n + 1, eta) > rabi_frequency(n, eta));
            if (eta > 0.0 && n > 0)
                CHECK(rabi_frequency(n, eta) > static_cast<double>(n + 1));
            else
                CHECK(rabi_frequency(n, eta) == static_cast<double>(n + 1));
        }
    }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS((ModelParams{-1.0, 0.0, 0.0, 0.0, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{1.0, 0.0, 0.0, -0.1, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{1.0, 0.0, 0.0, 0.0, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{NAN, 0.0, 0.0, 0.0, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(squeeze_from_sinh2(-1.0), std::invalid_argument);
    CHECK_NOTHROW((ModelParams{0.0, 0.0, 0.0, 0.0, 1}.validate()));
}

TEST_CASE("large squeeze keeps the coefficients finite")
{
    const ModelParams p{12.0, 0.0, 0.0, 0.0, 50};
    const TmsCoefficients c = tms_coefficients(p);
    for (const double v : c.values()) {
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
    }
}
