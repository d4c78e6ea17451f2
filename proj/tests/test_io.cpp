#include "doctest.h"
#include "plyfold/io.hpp"
#include "plyfold/svg.hpp"
#include "test_rng.hpp"

#include <cmath>

using namespace plyfold;

namespace {

const MaterialSpec kFig{1.0, 10.0, 8, 1e-6};

DeformationField sample_fold() {
    const double alpha = 0.2;
    ConstructionParams p;
    p.beta = 0.5 * (alpha + beta_eq(alpha));
    p.n = 4;
    p.l_arc = 0.7;
    p.boundaries = choose_boundaries(kFig, 4);
    return build_multilayer(kFig, alpha, p);
}

bool tags_balanced(const std::string& svg) {
    // cheap well-formedness probe: every opened element is closed
    int depth = 0;
    size_t i = 0;
    while ((i = svg.find('<', i)) != std::string::npos) {
        const size_t end = svg.find('>', i);
        if (end == std::string::npos) return false;
        const std::string tag = svg.substr(i, end - i + 1);
        if (tag.rfind("<?", 0) == 0 || tag.find("/>") != std::string::npos) {
            // declaration or self-closing
        } else if (tag.rfind("</", 0) == 0) {
            --depth;
        } else {
            ++depth;
        }
        i = end + 1;
    }
    return depth == 0;
}

}  // namespace

TEST_CASE("field JSON reconstructs bit-identically") {
    const DeformationField f = sample_fold();
    const DeformationField g = field_from_json_string(to_json_string(f));
    TestRng rng(1);
    for (int i = 0; i < 200; ++i) {
        const double x1 = rng.uniform(-kFig.L, kFig.L);
        const double x2 = rng.uniform(0.0, kFig.h * 0.999);
        const Vec2 a = f.eval(x1, x2);
        const Vec2 b = g.eval(x1, x2);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
    }
    CHECK(g.params.n == f.params.n);
    CHECK(g.params.beta == f.params.beta);
    CHECK(g.params.l_arc == f.params.l_arc);

    const DeformationField plate = build_plate(kFig, 0.37);
    const DeformationField plate2 = field_from_json_string(to_json_string(plate));
    CHECK(plate2.eval(1.3, 0.4).x == plate.eval(1.3, 0.4).x);

    const DeformationField cpa = build_cpa(kFig, 0.25, 0.5 * (0.25 + beta_eq(0.25)));
    const DeformationField cpa2 = field_from_json_string(to_json_string(cpa));
    CHECK(cpa2.beta == cpa.beta);
    CHECK(cpa2.eval(0.3, 0.2).y == cpa.eval(0.3, 0.2).y);
}

TEST_CASE("certificate and breakdown JSON carry their fields") {
    const DeformationField f = sample_fold();
    const std::string cert = to_json_string(certify(f));
    CHECK(cert.find("\"certified\": true") != std::string::npos);
    CHECK(cert.find("layer_separation") != std::string::npos);

    const std::string b = to_json_string(total_energy(f, QuadratureSettings{128, 8}));
    CHECK(b.find("\"elastic\"") != std::string::npos);
    CHECK(b.find("\"jump_lengths\"") != std::string::npos);
}

TEST_CASE("csv outputs carry a version comment, a header and data") {
    const std::vector<double> grid = log_grid(5e-3, 0.5, 10);
    const MomentCurve mc = moment_curve(kFig, grid, false);
    const std::string csv = moment_csv(mc, "moment --points 10");
    CHECK(csv.rfind("# plyfold", 0) == 0);
    CHECK(csv.find("alpha,energy,moment,regime,transition\n") != std::string::npos);
    CHECK(csv.find("# alpha_star,") != std::string::npos);
    // one line per grid point plus comment, header, footer
    const size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == grid.size() + 3);

    SweepDescriptor sw;
    sw.base = kFig;
    sw.param = "alpha";
    sw.lo = 1e-3;
    sw.hi = 3e-3;
    sw.points = 3;
    sw.declared = RegimeLabel::Elastic;
    const ScalingReport rep = verify_scaling(sw);
    const std::string scsv = scaling_csv(rep, "verify-scaling");
    CHECK(scsv.find("alpha,energy,regime,upper_bound,lower_bound\n") != std::string::npos);
    const std::string rjson = to_json_string(rep);
    CHECK(rjson.find("\"slope\"") != std::string::npos);
    CHECK(rjson.find("\"points\"") != std::string::npos);
}

TEST_CASE("svg plots are well-formed and render both axes") {
    std::vector<double> xs, ys;
    for (int i = 1; i <= 20; ++i) {
        xs.push_back(i * 0.01);
        ys.push_back(std::pow(i * 0.01, 2.0));
    }
    SvgPlot plot("energy", "alpha", "E", true, true);
    plot.add_series(xs, ys, "#c02020");
    const std::string svg = plot.render();
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("1e-2") != std::string::npos);  // log tick label
    CHECK(tags_balanced(svg));

    const std::string outline = field_outline_svg(sample_fold(), 128);
    CHECK(outline.find("</svg>") != std::string::npos);
    CHECK(tags_balanced(outline));
}

TEST_CASE("regime label round trip") {
    for (RegimeLabel l : {RegimeLabel::Elastic, RegimeLabel::SharpFoldPartial,
                          RegimeLabel::SharpFoldFull, RegimeLabel::LocalizedFull,
                          RegimeLabel::TotalDelam, RegimeLabel::SmallAngleTotal}) {
        CHECK(regime_from_string(to_string(l)) == l);
    }
    CHECK_THROWS_AS(regime_from_string("nope"), std::invalid_argument);
}
