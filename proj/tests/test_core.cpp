#include "doctest.h"
#include "plyfold/core.hpp"
#include "test_rng.hpp"

#include <cmath>

using namespace plyfold;

namespace {

// independent oracle: minimize |F - R(theta)|^2 over a fine theta grid
double dist_so2_bruteforce(const Mat2& f, int grid = 100000) {
    double best = 1e300;
    for (int i = 0; i < grid; ++i) {
        const double theta = 2.0 * kPi * i / grid;
        best = std::min(best, (f - rotation(theta)).frobenius_sq());
    }
    return best;
}

Mat2 random_matrix(TestRng& rng, double lo = -2.0, double hi = 2.0) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

}  // namespace

TEST_CASE("rotation basics") {
    const Mat2 id = rotation(0.0);
    CHECK(id.a11 == doctest::Approx(1.0));
    CHECK(id.a12 == doctest::Approx(0.0));
    CHECK(id.a21 == doctest::Approx(0.0));
    CHECK(id.a22 == doctest::Approx(1.0));

    const Mat2 q = rotation(kPi / 2.0);
    CHECK(q.a11 == doctest::Approx(0.0));
    CHECK(q.a12 == doctest::Approx(-1.0));
    CHECK(q.a21 == doctest::Approx(1.0));
    CHECK(q.a22 == doctest::Approx(0.0));

    // group law
    const Mat2 ab = rotation(0.3) * rotation(0.4);
    CHECK(frobenius_dist(ab, rotation(0.7)) < 1e-14);

    CHECK(rotation(1.234).det() == doctest::Approx(1.0));
}

TEST_CASE("dist_SO2_squared closed cases") {
    CHECK(dist_SO2_squared(rotation(0.7)) < 1e-14);

    // diag(1 - t, 1): nearest rotation is the identity, distance t^2
    const Mat2 shrink{0.75, 0.0, 0.0, 1.0};
    CHECK(dist_SO2_squared(shrink) == doctest::Approx(0.0625).epsilon(1e-12));

    const Mat2 aniso{2.0, 0.0, 0.0, 0.5};
    CHECK(dist_SO2_squared(aniso) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(dist_SO2_squared(aniso) == doctest::Approx(dist_so2_bruteforce(aniso)).epsilon(1e-6));
}

TEST_CASE("dist_SO2_squared rotation invariance") {
    TestRng rng(42);
    for (int i = 0; i < 100; ++i) {
        const Mat2 f = random_matrix(rng);
        const Mat2 r = rotation(rng.uniform(0.0, 2.0 * kPi));
        const double base = dist_SO2_squared(f);
        CHECK(std::abs(dist_SO2_squared(r * f) - base) < 1e-12);
        CHECK(std::abs(dist_SO2_squared(f * r) - base) < 1e-12);
    }
}

TEST_CASE("dist_SO2_squared zero iff rotation") {
    TestRng rng(7);
    for (int i = 0; i < 50; ++i) {
        const Mat2 r = rotation(rng.uniform(0.0, 2.0 * kPi));
        CHECK(dist_SO2_squared(r) < 1e-12);
        Mat2 perturbed = r;
        perturbed.a11 += 1e-3;
        CHECK(dist_SO2_squared(perturbed) > 1e-12);
    }
}

TEST_CASE("dist_SO2_squared matches brute force on random matrices") {
    TestRng rng(2024);
    for (int i = 0; i < 25; ++i) {
        const Mat2 f = random_matrix(rng);
        CHECK(std::abs(dist_SO2_squared(f) - dist_so2_bruteforce(f)) < 1e-6);
    }
}

TEST_CASE("material spec invariants") {
    CHECK_NOTHROW(validate(MaterialSpec{1.0, 10.0, 8, 1e-6}));
    CHECK_THROWS_AS(validate(MaterialSpec{0.0, 10.0, 8, 1e-6}), std::invalid_argument);
    CHECK_THROWS_AS(validate(MaterialSpec{1.0, -1.0, 8, 1e-6}), std::invalid_argument);
    CHECK_THROWS_AS(validate(MaterialSpec{1.0, 10.0, 0, 1e-6}), std::invalid_argument);
    CHECK_THROWS_AS(validate(MaterialSpec{1.0, 10.0, 8, 0.0}), std::invalid_argument);
    // h <= L/4 is required by the scaling bounds
    CHECK_THROWS_AS(validate(MaterialSpec{3.0, 10.0, 8, 1e-6}), std::invalid_argument);
    CHECK_NOTHROW(validate(MaterialSpec{2.5, 10.0, 8, 1e-6}));
}

TEST_CASE("bend angle domain") {
    CHECK_NOTHROW(BendAngle(kPi / 2.0));
    CHECK_NOTHROW(BendAngle(1e-9));
    CHECK_THROWS_AS(BendAngle(0.0), std::invalid_argument);
    CHECK_THROWS_AS(BendAngle(kPi / 2.0 + 1e-9), std::invalid_argument);
}
