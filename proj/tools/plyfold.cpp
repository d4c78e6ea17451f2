// plyfold: delaminated-fold constructions for layered plates under bending.
// Subcommands: construct, moment, phase-diagram, verify-scaling.
// Exit codes: 0 ok, 2 usage/validation, 3 certification failure, 4 regime violation.

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "plyfold/io.hpp"
#include "plyfold/parallel.hpp"
#include "plyfold/svg.hpp"

using namespace plyfold;

namespace {

struct SpecFlags {
    double h = 0.0, L = 0.0, gamma = 0.0;
    int N = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--h", h, "sample thickness")->required();
        cmd->add_option("--L", L, "sample half-length")->required();
        cmd->add_option("--N", N, "layer count")->required();
        cmd->add_option("--gamma", gamma, "delamination energy per unit length")->required();
    }
    MaterialSpec spec() const { return MaterialSpec{h, L, N, gamma}; }
};

std::string joined_args(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) os << " ";
        os << argv[i];
    }
    return os.str();
}

int run_construct(const SpecFlags& sf, double alpha, bool optimize, double beta, int n,
                  double l_arc, const std::string& prefix) {
    const MaterialSpec spec = sf.spec();
    validate(spec);
    validate_angle(alpha);

    DeformationField field = build_plate(spec, alpha);
    EnergyBreakdown breakdown;
    bool have_opt = false;
    OptimizeResult opt;
    if (optimize) {
        opt = optimize_construction(spec, alpha);
        field = opt.field();
        breakdown = opt.breakdown;
        have_opt = true;
    } else {
        ConstructionParams p;
        p.beta = beta;
        p.n = n;
        p.l_arc = l_arc;
        p.boundaries = choose_boundaries(spec, n);
        field = build_multilayer(spec, alpha, p);
        breakdown = total_energy(field, QuadratureSettings{512, 16});
    }

    const CertificateReport cert = certify(field);

    write_text_file(prefix + "_field.json", to_json_string(field));
    write_text_file(prefix + "_certificate.json", to_json_string(cert));
    write_text_file(prefix + "_energy.json",
                    have_opt ? to_json_string(opt) : to_json_string(breakdown));
    write_text_file(prefix + "_outline.svg", field_outline_svg(field));

    std::cout << "kind: " << to_string(field.kind) << "\n";
    if (have_opt && opt.split) std::cout << "composition: two half-angle folds on L/4 samples\n";
    std::cout << "elastic " << breakdown.elastic << " + delamination " << breakdown.delamination
              << " = " << breakdown.total << "\n";
    std::cout << "certified: " << (cert.certified ? "yes" : "no") << "\n";
    return cert.certified ? 0 : 3;
}

int run_moment(const SpecFlags& sf, double amin, double amax, int points,
               const std::string& mode, const std::string& prefix, const std::string& flags) {
    const MaterialSpec spec = sf.spec();
    validate(spec);
    if (points < 2 || !(amin > 0.0) || !(amax > amin) || amax > kPi / 2.0) {
        std::cerr << "moment: need 0 < --alpha-min < --alpha-max <= pi/2 and --points >= 2\n";
        return 2;
    }
    if (mode != "analytic" && mode != "measured") {
        std::cerr << "moment: --mode must be analytic or measured\n";
        return 2;
    }
    const std::vector<double> grid = log_grid(amin, amax, points);
    const MomentCurve mc = moment_curve(spec, grid, mode == "measured");

    write_text_file(prefix + ".csv", moment_csv(mc, flags));
    write_text_file(prefix + "_regimes.json", to_json_string(sorted_regimes(spec)));

    std::vector<double> xs, es, ms;
    for (const MomentRow& r : mc.rows) {
        xs.push_back(r.alpha);
        es.push_back(r.energy);
        ms.push_back(r.moment);
    }
    SvgPlot ep("bending energy", "alpha", "energy", true, true);
    ep.add_series(xs, es, "#c02020");
    write_text_file(prefix + "_energy.svg", ep.render());
    SvgPlot mp("bending moment", "alpha", "moment", true, false);
    mp.add_series(xs, ms, "#2040c0");
    write_text_file(prefix + "_moment.svg", mp.render());

    if (mc.has_crossing) {
        std::cout << "alpha_star " << mc.alpha_star << "\n";
    } else {
        std::cout << "alpha_star none\n";
    }
    return 0;
}

int run_phase(const SpecFlags& sf, double alpha, const std::string& axis1,
              const std::string& axis2, double min1, double max1, int points1, double min2,
              double max2, int points2, const std::string& out, const std::string& flags) {
    if (axis1 == axis2) {
        std::cerr << "phase-diagram: swept axes must differ\n";
        return 2;
    }
    const std::vector<std::string> axes = {"alpha", "h", "L", "N", "gamma"};
    for (const auto& a : {axis1, axis2}) {
        if (std::find(axes.begin(), axes.end(), a) == axes.end()) {
            std::cerr << "phase-diagram: unknown axis " << a << "\n";
            return 2;
        }
    }
    if (points1 < 1 || points2 < 1 || !(min1 > 0.0) || !(min2 > 0.0) || max1 < min1 ||
        max2 < min2) {
        std::cerr << "phase-diagram: need positive log ranges and points >= 1\n";
        return 2;
    }
    auto assign = [&](MaterialSpec& spec, double& a, const std::string& axis, double v) {
        if (axis == "alpha") {
            a = v;
        } else if (axis == "h") {
            spec.h = v;
        } else if (axis == "L") {
            spec.L = v;
        } else if (axis == "N") {
            spec.N = static_cast<int>(std::lround(v));
        } else {
            spec.gamma = v;
        }
    };
    std::vector<PhaseCell> cells;
    for (double v1 : log_grid(min1, max1, points1)) {
        for (double v2 : log_grid(min2, max2, points2)) {
            MaterialSpec spec = sf.spec();
            double a = alpha;
            assign(spec, a, axis1, v1);
            assign(spec, a, axis2, v2);
            PhaseCell cell;
            cell.v1 = v1;
            cell.v2 = v2;
            try {
                const BoundResult b = upper_bound(spec, a);
                cell.regime = to_string(classify(spec, a));
                cell.bound = b.value;
            } catch (const std::exception&) {
                cell.regime = "invalid";
                cell.bound = std::nan("");
            }
            cells.push_back(cell);
        }
    }
    write_text_file(out, phase_csv(cells, axis1, axis2, flags));
    std::cout << "cells " << cells.size() << "\n";
    return 0;
}

int run_verify_scaling(const SpecFlags& sf, double alpha, const std::string& param,
                       const std::string& regime, double decades, int points, double tol,
                       const std::string& out, const std::string& flags) {
    SweepDescriptor sw;
    sw.base = sf.spec();
    sw.alpha = alpha;
    sw.param = param;
    sw.declared = regime_from_string(regime);
    sw.points = points;
    sw.slope_tol = tol;
    const double start = [&] {
        if (param == "alpha") return alpha;
        if (param == "gamma") return sw.base.gamma;
        if (param == "h") return sw.base.h;
        if (param == "L") return sw.base.L;
        if (param == "N") return static_cast<double>(sw.base.N);
        throw std::invalid_argument("verify-scaling: unknown --sweep " + param);
    }();
    sw.lo = start;
    sw.hi = start * std::pow(10.0, decades);
    const ScalingReport rep = verify_scaling(sw);
    write_text_file(out, to_json_string(rep));
    write_text_file(out + ".csv", scaling_csv(rep, flags));
    std::cout << "slope " << rep.slope << " expected " << rep.expected << " regime_ok "
              << (rep.regime_ok ? "yes" : "no") << "\n";
    if (!rep.regime_ok) return 4;
    return rep.slope_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delaminated-fold constructions, energies and scaling checks"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    const std::string flags = joined_args(argc, argv);

    // construct
    auto* c = app.add_subcommand("construct", "build (or optimize) a fold, certify it, dump JSON");
    SpecFlags c_spec;
    c_spec.attach(c);
    double c_alpha = 0.0, c_beta = 0.0, c_larc = 0.0;
    int c_n = 0;
    bool c_opt = false;
    std::string c_prefix = "construct";
    c->add_option("--alpha", c_alpha, "bending half-angle")->required();
    auto* o_opt = c->add_flag("--optimize", c_opt, "minimize measured energy over the admissible set");
    auto* o_beta = c->add_option("--beta", c_beta, "inner fold angle");
    auto* o_n = c->add_option("--n", c_n, "delaminated layer count");
    auto* o_larc = c->add_option("--l-arc", c_larc, "corner arc length");
    c->add_option("--out-prefix", c_prefix, "output file prefix");
    o_opt->excludes(o_beta)->excludes(o_n)->excludes(o_larc);

    // moment
    auto* m = app.add_subcommand("moment", "energy and moment curves over an alpha grid");
    SpecFlags m_spec;
    m_spec.attach(m);
    double m_amin = 0.0, m_amax = 0.0;
    int m_points = 0;
    std::string m_mode = "analytic", m_prefix = "moment";
    m->add_option("--alpha-min", m_amin)->required();
    m->add_option("--alpha-max", m_amax)->required();
    m->add_option("--points", m_points)->required();
    m->add_option("--mode", m_mode, "analytic|measured");
    m->add_option("--out-prefix", m_prefix);

    // phase-diagram
    auto* p = app.add_subcommand("phase-diagram", "regime label over a 2-axis log grid");
    SpecFlags p_spec;
    p_spec.attach(p);
    double p_alpha = 0.1;
    std::string p_axis1, p_axis2, p_out = "phase.csv";
    double p_min1 = 0.0, p_max1 = 0.0, p_min2 = 0.0, p_max2 = 0.0;
    int p_pts1 = 0, p_pts2 = 0;
    p->add_option("--alpha", p_alpha, "fixed alpha when not swept");
    p->add_option("--axis1", p_axis1)->required();
    p->add_option("--min1", p_min1)->required();
    p->add_option("--max1", p_max1)->required();
    p->add_option("--points1", p_pts1)->required();
    p->add_option("--axis2", p_axis2)->required();
    p->add_option("--min2", p_min2)->required();
    p->add_option("--max2", p_max2)->required();
    p->add_option("--points2", p_pts2)->required();
    p->add_option("--out", p_out);

    // verify-scaling
    auto* v = app.add_subcommand("verify-scaling", "fit a measured log-log scaling exponent");
    SpecFlags v_spec;
    v_spec.attach(v);
    double v_alpha = 0.0, v_decades = 1.0, v_tol = 0.1;
    int v_points = 9;
    std::string v_param, v_regime, v_out = "scaling_report.json";
    v->add_option("--alpha", v_alpha, "bending half-angle (sweep start when sweeping alpha)")
        ->required();
    v->add_option("--sweep", v_param, "alpha|gamma|h|L|N")->required();
    v->add_option("--regime", v_regime, "declared regime label")->required();
    v->add_option("--decades", v_decades);
    v->add_option("--points", v_points);
    v->add_option("--tol", v_tol, "slope tolerance");
    v->add_option("--out", v_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (*c) {
            if (!c_opt && (!*o_beta || !*o_n || !*o_larc)) {
                std::cerr << "construct: give --beta --n --l-arc, or --optimize\n";
                return 2;
            }
            return run_construct(c_spec, c_alpha, c_opt, c_beta, c_n, c_larc, c_prefix);
        }
        if (*m) {
            return run_moment(m_spec, m_amin, m_amax, m_points, m_mode, m_prefix, flags);
        }
        if (*p) {
            return run_phase(p_spec, p_alpha, p_axis1, p_axis2, p_min1, p_max1, p_pts1, p_min2,
                             p_max2, p_pts2, p_out, flags);
        }
        if (*v) {
            return run_verify_scaling(v_spec, v_alpha, v_param, v_regime, v_decades, v_points,
                                      v_tol, v_out, flags);
        }
    } catch (const AdmissibilityError& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
