#include "doctest.h"
#include "plyfold/scaling.hpp"
#include "test_rng.hpp"

#include <cmath>

using namespace plyfold;

namespace {

const MaterialSpec kFig{1.0, 10.0, 8, 1e-6};

// derived regime thresholds at the figure parameters
const double kA1 = 1.5848931924611134e-2;  // gamma^{2/5} L^{3/5} / h
const double kA2 = 0.15041e0;              // gamma^{1/4} N^{3/4} / h^{1/4}
const double kA3 = 0.22627416997969522;    // gamma^{1/2} L N^{3/2} / h^{3/2}

}  // namespace

TEST_CASE("upper bound branches at figure parameters") {
    const BoundResult low = upper_bound(kFig, 0.001);
    CHECK(low.label == RegimeLabel::Elastic);
    CHECK(low.value == doctest::Approx(1e-7).epsilon(1e-12));

    CHECK(upper_bound(kFig, 0.05).label == RegimeLabel::SharpFoldPartial);
    CHECK(upper_bound(kFig, 0.2).label == RegimeLabel::LocalizedFull);
    CHECK(upper_bound(kFig, 0.5).label == RegimeLabel::TotalDelam);

    CHECK_THROWS_AS(upper_bound(MaterialSpec{3.0, 10.0, 8, 1e-6}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound(kFig, 0.0), std::invalid_argument);
}

TEST_CASE("sorted regimes at figure parameters") {
    // case gates of the four-interval table hold here
    CHECK(kFig.h > kFig.gamma * 512);                  // h > gamma N^3
    CHECK(32768.0 > kFig.gamma * 1e4);                 // h^5 N^5 > gamma L^4
    CHECK(1.0 < kFig.gamma * 1e4 * 512);               // h^5 < gamma L^4 N^3

    const auto regs = sorted_regimes(kFig);
    REQUIRE(regs.size() == 4);
    CHECK(regs[0].label == RegimeLabel::Elastic);
    CHECK(regs[1].label == RegimeLabel::SharpFoldPartial);
    CHECK(regs[2].label == RegimeLabel::LocalizedFull);
    CHECK(regs[3].label == RegimeLabel::TotalDelam);
    CHECK(regs[1].lo == doctest::Approx(kA1).epsilon(1e-6));
    CHECK(regs[2].lo == doctest::Approx(kA2).epsilon(1e-3));
    CHECK(regs[3].lo == doctest::Approx(kA3).epsilon(1e-6));
    CHECK(regs[0].lo == 0.0);
    CHECK(regs[3].hi == doctest::Approx(kPi / 2.0));
}

TEST_CASE("sorted regimes without the cube-root branch") {
    // gamma L^4 >= h^5 N^5 drops the a^{1/3} regime
    const MaterialSpec s{1.0, 16.0, 2, 9e-4};
    CHECK(s.gamma * std::pow(s.L, 4.0) >= 32.0);
    const auto regs = sorted_regimes(s);
    REQUIRE(regs.size() == 3);
    CHECK(regs[0].label == RegimeLabel::Elastic);
    CHECK(regs[1].label == RegimeLabel::LocalizedFull);
    CHECK(regs[2].label == RegimeLabel::TotalDelam);
    for (const auto& r : regs) CHECK(r.label != RegimeLabel::SharpFoldPartial);
}

TEST_CASE("sorted regimes in the thin-sample case") {
    // h <= gamma N^3: only elastic and the a^{1/3} branch remain
    const MaterialSpec s{1.0, 10.0, 8, 1e-2};
    CHECK(s.h <= s.gamma * 512);
    const auto regs = sorted_regimes(s);
    REQUIRE(regs.size() == 2);
    CHECK(regs[0].label == RegimeLabel::Elastic);
    CHECK(regs[1].label == RegimeLabel::SharpFoldPartial);
}

TEST_CASE("upper bound and sorted regimes agree inside the table gates") {
    TestRng rng(77);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 1000; ++trial) {
        MaterialSpec s;
        s.h = rng.uniform(0.2, 2.0);
        s.L = s.h * rng.uniform(4.0, 400.0);
        s.N = rng.uniform_int(2, 64);
        s.gamma = std::pow(10.0, rng.uniform(-10.0, -1.0));
        const double N = s.N;
        if (!(s.h > s.gamma * N * N * N)) continue;                                  // table gate
        if (!(std::pow(s.h, 5.0) < s.gamma * std::pow(s.L, 4.0) * N * N * N)) continue;
        const double alpha = std::pow(10.0, rng.uniform(-4.0, std::log10(kPi / 2.0)));
        // skip points within a whisker of a regime breakpoint
        bool near_break = false;
        for (const auto& r : sorted_regimes(s)) {
            if (std::abs(alpha - r.lo) < 1e-6 * alpha) near_break = true;
        }
        if (near_break) continue;
        const BoundResult ub = upper_bound(s, alpha);
        CHECK(classify(s, alpha) == ub.label);
        // value consistency: the labeled branch formula equals the min/max
        // form
        double formula = 0.0;
        switch (ub.label) {
            case RegimeLabel::Elastic:
                formula = alpha * alpha * s.h * s.h * s.h / s.L;
                break;
            case RegimeLabel::SharpFoldPartial:
            case RegimeLabel::SharpFoldFull:
                formula = std::cbrt(alpha) * std::pow(s.gamma, 2.0 / 3.0) *
                          std::pow(s.h, 4.0 / 3.0);
                break;
            case RegimeLabel::LocalizedFull:
                formula = alpha * std::sqrt(s.gamma) * std::pow(s.h, 1.5) / std::sqrt(N);
                break;
            case RegimeLabel::TotalDelam:
                formula = alpha * alpha * s.h * s.h * s.h / (s.L * N * N);
                break;
            case RegimeLabel::SmallAngleTotal:
                formula = alpha * std::pow(s.h, 4.0) / (s.L * s.L * N * N);
                break;
        }
        CHECK(ub.value == doctest::Approx(formula).epsilon(1e-12));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("lower bound") {
    // arithmetic at the figure parameters
    const double got = lower_bound(kFig, 0.001);
    CHECK(got == doctest::Approx(1e-7).epsilon(1e-12));
    // branch values that lose the min
    const double b2 = 0.001 * std::sqrt(1e-6) / std::sqrt(8.0) + 1e-7 / 64.0;
    CHECK(b2 == doctest::Approx(3.5511e-7).epsilon(1e-3));
    CHECK(lower_bound(kFig, 0.001, 8) == got);

    // vanishes with the angle
    CHECK(lower_bound(kFig, 1e-12) < 1e-15);

    // never above twice the upper bound (the linear+quadratic sum vs max)
    TestRng rng(3);
    for (int i = 0; i < 1000; ++i) {
        MaterialSpec s;
        s.h = rng.uniform(0.2, 2.0);
        s.L = s.h * rng.uniform(4.0, 100.0);
        s.N = rng.uniform_int(1, 64);
        s.gamma = std::pow(10.0, rng.uniform(-9.0, -2.0));
        const double alpha = std::pow(10.0, rng.uniform(-4.0, std::log10(kPi / 2.0)));
        CHECK(lower_bound(s, alpha) <= 2.0 * upper_bound(s, alpha).value * (1.0 + 1e-12));
    }
}

TEST_CASE("optimal delamination length") {
    CHECK(optimal_delam_length(kFig, 0.5 * kA1) == 0.0);
    CHECK(optimal_delam_length(kFig, 1.5 * kA3) == kFig.L);
    // third branch at alpha = 0.2
    CHECK(optimal_delam_length(kFig, 0.2) ==
          doctest::Approx(0.2 * 1e3 / std::pow(8.0, 1.5)).epsilon(1e-12));
    CHECK(optimal_delam_length(kFig, 0.2) == doctest::Approx(8.8388).epsilon(1e-3));
    // second branch scales like a^{1/3}
    const double e2 = optimal_delam_length(kFig, 0.08) / optimal_delam_length(kFig, 0.04);
    CHECK(e2 == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
    // case gates are enforced
    CHECK_THROWS_AS(optimal_delam_length(MaterialSpec{1.0, 10.0, 8, 1e-2}, 0.2),
                    std::domain_error);
}

TEST_CASE("expected exponents") {
    CHECK(expected_exponent("alpha", RegimeLabel::Elastic) == doctest::Approx(2.0));
    CHECK(expected_exponent("alpha", RegimeLabel::SharpFoldPartial) == doctest::Approx(1.0 / 3.0));
    CHECK(expected_exponent("alpha", RegimeLabel::LocalizedFull) == doctest::Approx(1.0));
    CHECK(expected_exponent("gamma", RegimeLabel::SharpFoldPartial) == doctest::Approx(2.0 / 3.0));
    CHECK(expected_exponent("gamma", RegimeLabel::LocalizedFull) == doctest::Approx(0.5));
    CHECK(expected_exponent("N", RegimeLabel::LocalizedFull) == doctest::Approx(-0.5));
    CHECK(expected_exponent("N", RegimeLabel::TotalDelam) == doctest::Approx(-2.0));
    CHECK(expected_exponent("L", RegimeLabel::Elastic) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(expected_exponent("bogus", RegimeLabel::Elastic), std::invalid_argument);
}

TEST_CASE("loglog slope fitting") {
    std::vector<double> x, y;
    for (int i = 1; i <= 12; ++i) {
        x.push_back(0.01 * i);
        y.push_back(3.0 * std::pow(0.01 * i, 1.5));
    }
    CHECK(loglog_slope(x, y) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("optimizer returns the plate below the yielding point") {
    const OptimizeResult r = optimize_construction(kFig, 0.001);
    CHECK_FALSE(r.delaminated);
    CHECK(r.breakdown.delamination == 0.0);
    CHECK(r.breakdown.total == doctest::Approx(4.0 * 1e-6 / 30.0).epsilon(5e-3));
}

TEST_CASE("optimizer delaminates in the localized-full regime") {
    const OptimizeResult r = optimize_construction(kFig, 0.2);
    CHECK(r.delaminated);
    CHECK_FALSE(r.split);
    CHECK(classify(kFig, 0.2) == RegimeLabel::LocalizedFull);
    CHECK(r.params.n == kFig.N);  // full delamination
    CHECK(r.breakdown.total < r.plate_energy);
    // never worse than the closed-form seed: re-evaluate the seed triple
    const CertificateReport cert = certify(r.field());
    CHECK(cert.certified);
}

TEST_CASE("optimizer tracks the closed-form arc length in localized-full") {
    // wide-sample family where the critical arc length is uncapped
    const MaterialSpec lf{1.0, 26000.0, 48, 1.77e-11};
    const double alpha = 0.3;
    const OptimizeResult r = optimize_construction(lf, alpha);
    REQUIRE(r.delaminated);
    CHECK(r.params.n == lf.N);
    const double l_closed =
        2.0 * alpha * std::pow(lf.h, 1.5) / (std::sqrt(lf.gamma) * std::pow(lf.N, 1.5));
    CHECK(r.params.l_arc > l_closed / 3.0);
    CHECK(r.params.l_arc < l_closed * 3.0);

    // descent property: never worse than the closed-form seed triple
    // (beta_crit falls below alpha deep in localized-full; the seed clamps
    // to the small-angle choice 2 alpha, like the optimizer's own seeding)
    const double bcrit = std::cbrt(alpha) * std::pow(lf.gamma, 1.0 / 6.0) * std::sqrt(48.0);
    ConstructionParams seed;
    seed.beta = std::min(std::max(bcrit, 2.0 * alpha), beta_eq(alpha));
    seed.n = lf.N;
    seed.l_arc = std::clamp(seed.beta * std::pow(lf.h, 1.5) /
                                (std::sqrt(lf.gamma) * std::pow(lf.N, 1.5)),
                            2.0 * seed.beta * lf.h / lf.N, lf.L / 8.0);
    seed.boundaries = choose_boundaries(lf, lf.N);
    const double seed_energy =
        total_energy(build_multilayer(lf, alpha, seed), OptimizerSettings{}.quad,
                     OptimizerSettings{}.delam_samples)
            .total;
    CHECK(r.breakdown.total <= seed_energy * (1.0 + 1e-12));
}

TEST_CASE("measured and analytic energies agree in slope within a regime") {
    // elastic regime: measured optimizer returns the plate, slope 2 in both
    const std::vector<double> grid = log_grid(3e-4, 3e-3, 6);
    const MomentCurve measured = moment_curve(kFig, grid, true);
    const MomentCurve analytic = moment_curve(kFig, grid, false);
    std::vector<double> xs, em, ea;
    for (size_t i = 0; i < grid.size(); ++i) {
        xs.push_back(grid[i]);
        em.push_back(measured.rows[i].energy);
        ea.push_back(analytic.rows[i].energy);
    }
    CHECK(std::abs(loglog_slope(xs, em) - loglog_slope(xs, ea)) < 0.1);
}

TEST_CASE("results do not depend on the thread count") {
    SweepDescriptor sw;
    sw.base = kFig;
    sw.param = "alpha";
    sw.lo = 1e-3;
    sw.hi = 3e-3;
    sw.points = 4;
    sw.declared = RegimeLabel::Elastic;
    setenv("PLYFOLD_THREADS", "1", 1);
    const ScalingReport serial = verify_scaling(sw);
    setenv("PLYFOLD_THREADS", "7", 1);
    const ScalingReport parallel = verify_scaling(sw);
    unsetenv("PLYFOLD_THREADS");
    CHECK(serial.slope == parallel.slope);
    REQUIRE(serial.points.size() == parallel.points.size());
    for (size_t i = 0; i < serial.points.size(); ++i) {
        CHECK(serial.points[i].energy == parallel.points[i].energy);
    }
}

TEST_CASE("optimizer handles angles above pi/4 by composing half folds") {
    const MaterialSpec wide{1.0, 64.0, 8, 1e-6};
    const OptimizeResult r = optimize_construction(wide, 1.2);
    CHECK(r.delaminated);
    CHECK(r.split);
    CHECK(r.fold_alpha == doctest::Approx(0.6));
    CHECK(r.fold_spec.L == doctest::Approx(16.0));
    // composite energy is twice the half-fold field's energy
    const EnergyBreakdown half = total_energy(r.field(), QuadratureSettings{192, 8}, 160);
    CHECK(r.breakdown.total == doctest::Approx(2.0 * half.total).epsilon(1e-6));
    CHECK(certify(r.field()).certified);
}

TEST_CASE("moment curve at figure parameters, analytic mode") {
    const std::vector<double> grid = log_grid(1e-3, 1.5, 80);
    const MomentCurve mc = moment_curve(kFig, grid, false);
    REQUIRE(mc.rows.size() == grid.size());

    // regimes appear in the canonical order
    std::vector<RegimeLabel> seen;
    for (const MomentRow& r : mc.rows) {
        if (seen.empty() || seen.back() != r.label) seen.push_back(r.label);
    }
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == RegimeLabel::Elastic);
    CHECK(seen[1] == RegimeLabel::SharpFoldPartial);
    CHECK(seen[2] == RegimeLabel::LocalizedFull);
    CHECK(seen[3] == RegimeLabel::TotalDelam);

    // one crossing, at the elastic/delaminated branch equality
    CHECK(mc.has_crossing);
    CHECK(mc.alpha_star == doctest::Approx(kA1).epsilon(1e-6));
    int transitions = 0;
    for (const MomentRow& r : mc.rows) transitions += r.transition ? 1 : 0;
    CHECK(transitions == 1);

    // elastic branch: M = 2 a h^3 / L
    for (const MomentRow& r : mc.rows) {
        if (r.alpha < 0.8 * mc.alpha_star) {
            CHECK(r.moment == doctest::Approx(2.0 * r.alpha / 10.0).epsilon(1e-6));
        }
    }
    // localized-full branch: M constant in alpha
    double m_lo = 0.0, m_hi = 0.0;
    for (const MomentRow& r : mc.rows) {
        if (r.label == RegimeLabel::LocalizedFull && r.alpha > 1.05 * kA2 &&
            r.alpha < 0.95 * kA3) {
            if (m_lo == 0.0) m_lo = r.moment;
            m_hi = r.moment;
        }
    }
    CHECK(m_lo > 0.0);
    CHECK(m_hi == doctest::Approx(m_lo).epsilon(1e-6));
    // the moment drops across the crossing
    const MomentRow* before = nullptr;
    const MomentRow* after = nullptr;
    for (const MomentRow& r : mc.rows) {
        if (r.alpha < mc.alpha_star) before = &r;
        if (!after && r.alpha > mc.alpha_star) after = &r;
    }
    REQUIRE(before);
    REQUIRE(after);
    CHECK(after->moment < before->moment);
}

TEST_CASE("analytic moment curve is monotone in N and gamma") {
    const std::vector<double> grid = log_grid(5e-3, 1.0, 12);
    for (double a : grid) {
        // E nonincreasing in N
        double prev = 1e300;
        for (int N : {4, 8, 16}) {
            const double e = upper_bound(MaterialSpec{1.0, 10.0, N, 1e-6}, a).value;
            CHECK(e <= prev * (1.0 + 1e-12));
            prev = e;
        }
        // E nondecreasing in gamma
        prev = 0.0;
        for (double g : {1e-7, 1e-6, 1e-5}) {
            const double e = upper_bound(MaterialSpec{1.0, 10.0, 8, g}, a).value;
            CHECK(e >= prev * (1.0 - 1e-12));
            prev = e;
        }
    }
}

TEST_CASE("verify_scaling on the elastic regime") {
    SweepDescriptor sw;
    sw.base = kFig;
    sw.param = "alpha";
    sw.lo = 1e-3;
    sw.hi = 1e-2;
    sw.points = 6;
    sw.declared = RegimeLabel::Elastic;
    sw.slope_tol = 0.05;
    const ScalingReport rep = verify_scaling(sw);
    CHECK(rep.regime_ok);
    CHECK(rep.slope == doctest::Approx(2.0).epsilon(2e-2));
    CHECK(rep.slope_ok);
    CHECK(rep.expected == doctest::Approx(2.0));
    for (const ScalingPoint& p : rep.points) {
        CHECK(p.lower <= p.energy * (1.0 + 1e-9));
        CHECK(p.label == RegimeLabel::Elastic);
    }
}

TEST_CASE("verify_scaling flags a sweep that exits the declared regime") {
    SweepDescriptor sw;
    sw.base = kFig;
    sw.param = "alpha";
    sw.lo = 5e-3;
    sw.hi = 5e-2;  // crosses the elastic boundary at ~1.58e-2
    sw.points = 5;
    sw.declared = RegimeLabel::Elastic;
    const ScalingReport rep = verify_scaling(sw);
    CHECK_FALSE(rep.regime_ok);
}
