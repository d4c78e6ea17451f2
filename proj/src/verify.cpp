#include "plyfold/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace plyfold {

double check_boundary(const DeformationField& field) {
    const double L = field.spec.L;
    double worst = 0.0;
    const auto strips = field.strips();
    const int per_side = 100;
    for (const auto& [lo, hi] : strips) {
        for (int iy = 0; iy < 4; ++iy) {
            const double y = lo + (hi - lo) * (iy + 0.5) / 4.0;
            for (int ix = 0; ix < per_side; ++ix) {
                const double a = L / 2.0 + (L / 2.0) * ix / (per_side - 1);
                for (double x1 : {a, -a}) {
                    const Mat2 want = rotation(x1 < 0.0 ? field.alpha : -field.alpha);
                    worst = std::max(worst, frobenius_dist(field.eval_grad(x1, y), want));
                }
            }
        }
    }
    return worst;
}

bool check_central_radius(const ConstructionParams& params) {
    const double radius = params.l_arc / params.beta;
    return params.max_layer_thickness() <= radius * (1.0 + 1e-12);
}

namespace {

// sample parameters on every piece of the layer midline (central arc,
// down-slopes, corner arcs and a stub of the tails), both sides, clipped
// to the window
std::vector<double> piece_samples(const LayerCurve& c, double window, int per_piece) {
    std::vector<double> breaks = {-window,
                                  -(c.l_down + 2.0 * c.l_arc),
                                  -(c.l_down + c.l_arc),
                                  -c.l_arc,
                                  c.l_arc,
                                  c.l_down + c.l_arc,
                                  c.l_down + 2.0 * c.l_arc,
                                  window};
    for (double& b : breaks) b = std::clamp(b, -window, window);
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> xs;
    xs.reserve(7 * static_cast<size_t>(per_piece) + 8);
    for (size_t p = 0; p + 1 < breaks.size(); ++p) {
        if (breaks[p + 1] - breaks[p] <= 0.0) continue;
        for (int i = 0; i <= per_piece; ++i) {
            xs.push_back(breaks[p] + (breaks[p + 1] - breaks[p]) * i / per_piece);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

double pair_distance_sq(const LayerCurve& a, const LayerCurve& b, double s, double t) {
    const Vec2 d = a.point(s) - b.point(t);
    return d.x * d.x + d.y * d.y;
}

// golden-section minimization of 1D slice
double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

SeparationResult check_layer_separation(const DeformationField& field, int samples_per_piece) {
    SeparationResult out;
    out.min_ratio = 1e9;
    if (field.kind != FieldKind::Multilayer || field.params.n <= 1) {
        return out;
    }
    const double L = field.spec.L;
    for (int j = 0; j + 1 < field.params.n; ++j) {
        const LayerCurve& below = field.curves[j];
        const LayerCurve& above = field.curves[j + 1];
        const double hj = field.params.layer_thickness(j);

        // Beyond the below layer's closure point the two midlines are glued
        // at exact distance h_j (the jump has closed), so the minimum there
        // is identically h_j and carries no information. Sample the
        // jump-open region, stopping half an arc short of closure.
        const double window = std::min(below.l_down + 1.5 * below.l_arc, L);
        const auto ss = piece_samples(below, window, samples_per_piece);
        const auto ts = piece_samples(above, window, samples_per_piece);
        std::vector<Vec2> ps(ss.size()), qs(ts.size());
        for (size_t i = 0; i < ss.size(); ++i) ps[i] = below.point(ss[i]);
        for (size_t i = 0; i < ts.size(); ++i) qs[i] = above.point(ts[i]);

        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        for (size_t a = 0; a < ps.size(); ++a) {
            const double px = ps[a].x, py = ps[a].y;
            for (size_t b = 0; b < qs.size(); ++b) {
                const double dx = px - qs[b].x, dy = py - qs[b].y;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best) {
                    best = d2;
                    bi = a;
                    bj = b;
                }
            }
        }
        // local refinement: alternate golden sections in s and t around the
        // grid minimizer
        double s = ss[bi], t = ts[bj];
        const double ds = (ss.back() - ss.front()) / (ss.size() - 1) * 4.0;
        const double dt = (ts.back() - ts.front()) / (ts.size() - 1) * 4.0;
        for (int round = 0; round < 6; ++round) {
            const double span_s = ds / (1 << round);
            const double span_t = dt / (1 << round);
            s = golden_min([&](double x) { return pair_distance_sq(below, above, x, t); },
                           std::max(-window, s - span_s), std::min(window, s + span_s), 40);
            t = golden_min([&](double x) { return pair_distance_sq(below, above, s, x); },
                           std::max(-window, t - span_t), std::min(window, t + span_t), 40);
        }
        const double refined = std::sqrt(pair_distance_sq(below, above, s, t));
        const double coarse = std::sqrt(best);
        const double ratio = std::min(refined, coarse) / hj;
        if (ratio < out.min_ratio) {
            out.min_ratio = ratio;
            out.pair = j;
            out.s = s;
            out.t = t;
        }
    }
    return out;
}

CertificateReport certify(const DeformationField& field) {
    CertificateReport rep;
    auto add = [&](CheckResult c) { rep.checks.push_back(std::move(c)); };

    {
        CheckResult c;
        c.name = "boundary_gradient";
        c.value = check_boundary(field);
        c.pass = c.value < 1e-12;
        add(std::move(c));
    }

    switch (field.kind) {
        case FieldKind::Plate: {
            CheckResult c;
            c.name = "plate_radius";
            // injectivity of the offset construction: thickness below the
            // arc radius L/(2 alpha)
            c.value = 2.0 * field.alpha * field.spec.h / field.spec.L;
            c.pass = c.value < 1.0;
            add(std::move(c));
            break;
        }
        case FieldKind::Cpa: {
            CheckResult c;
            c.name = "opening_admissible";
            c.value = f_alpha(field.alpha, field.beta);
            c.pass = c.value >= 1.0 - 1e-9;
            c.note = "d*cos(beta) >= 1";
            add(std::move(c));
            CheckResult z;
            z.name = "downslope_fits";
            z.value = field.zeta * 2.0 * field.spec.h / field.spec.L;
            z.pass = z.value <= 1.0 + 1e-12;
            z.note = "zeta <= L/(2h)";
            add(std::move(z));
            break;
        }
        case FieldKind::Multilayer: {
            {
                CheckResult c;
                c.name = "params_constraints";
                try {
                    validate_params(field.spec, field.alpha, field.params);
                    c.pass = true;
                } catch (const std::exception& e) {
                    c.pass = false;
                    c.note = e.what();
                }
                add(std::move(c));
            }
            {
                CheckResult c;
                c.name = "central_radius";
                c.value = field.params.max_layer_thickness() * field.params.beta / field.params.l_arc;
                c.pass = check_central_radius(field.params);
                c.note = "h_j <= l_arc/beta";
                add(std::move(c));
            }
            {
                CheckResult c;
                c.name = "layer_separation";
                const SeparationResult s = check_layer_separation(field);
                c.value = s.min_ratio;
                c.pass = s.min_ratio >= 1.0 - 1e-9;
                c.witness = {s.s, s.t, static_cast<double>(s.pair), 0.0};
                add(std::move(c));
            }
            break;
        }
    }

    rep.certified = std::all_of(rep.checks.begin(), rep.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
    return rep;
}

}  // namespace plyfold
