#include "plyfold/construct.hpp"

#include <algorithm>
#include <cmath>

namespace plyfold {

double ConstructionParams::max_layer_thickness() const {
    double m = 0.0;
    for (size_t j = 0; j + 1 < boundaries.size(); ++j) {
        m = std::max(m, boundaries[j + 1] - boundaries[j]);
    }
    return m;
}

std::vector<double> choose_boundaries(const MaterialSpec& spec, int n) {
    validate(spec);
    if (n < 1 || n > spec.N) {
        throw std::invalid_argument("choose_boundaries: n must be in [1, N]");
    }
    std::vector<double> b;
    b.reserve(static_cast<size_t>(n) + 1);
    b.push_back(0.0);
    const double grid = spec.layer_grid();
    for (int j = 1; j < n; ++j) {
        const double target = static_cast<double>(j) * spec.N / n;
        // nearest grid index, half-integer ties to the lower point
        long k = std::lround(target);
        if (static_cast<double>(k) - target == 0.5) --k;
        b.push_back(static_cast<double>(k) * grid);
    }
    b.push_back(spec.h);
    return b;
}

std::string to_string(FieldKind kind) {
    switch (kind) {
        case FieldKind::Plate: return "plate";
        case FieldKind::Cpa: return "cpa";
        case FieldKind::Multilayer: return "multilayer";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// LayerCurve

void LayerCurve::init_piece_endpoints() {
    const double r1 = l_arc / beta;
    const double r2 = l_arc / (alpha + beta);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    end_a = Vec2{r1 * sb, base_y + r1 * (1.0 - cb)};
    end_b = end_a + Vec2{l_down * cb, l_down * sb};
    end_c = end_b + Vec2{r2 * (sb + sa), r2 * (ca - cb)};
}

double LayerCurve::angle(double x1) const {
    const double s = x1 < 0.0 ? -1.0 : 1.0;
    const double a = std::abs(x1);
    double phi;
    if (a < l_arc) {
        phi = beta * a / l_arc;
    } else if (a < l_down + l_arc) {
        phi = beta;
    } else if (a < l_down + 2.0 * l_arc) {
        phi = beta - (a - l_down - l_arc) / l_arc * (alpha + beta);
    } else {
        phi = -alpha;
    }
    return s * phi;
}

double LayerCurve::angle_slope(double x1) const {
    const double a = std::abs(x1);
    if (a < l_arc) return beta / l_arc;
    if (a < l_down + l_arc) return 0.0;
    if (a < l_down + 2.0 * l_arc) return -(alpha + beta) / l_arc;
    return 0.0;
}

Vec2 LayerCurve::point(double x1) const {
    const double a = std::abs(x1);
    Vec2 p;
    if (a < l_arc) {
        const double r1 = l_arc / beta;
        const double phi = beta * a / l_arc;
        p = Vec2{r1 * std::sin(phi), base_y + r1 * (1.0 - std::cos(phi))};
    } else if (a < l_down + l_arc) {
        p = end_a + (a - l_arc) * Vec2{std::cos(beta), std::sin(beta)};
    } else if (a < l_down + 2.0 * l_arc) {
        const double r2 = l_arc / (alpha + beta);
        const double phi = beta - (a - l_down - l_arc) / l_arc * (alpha + beta);
        p = end_b + Vec2{r2 * (std::sin(beta) - std::sin(phi)),
                         r2 * (std::cos(phi) - std::cos(beta))};
    } else {
        p = end_c + (a - l_down - 2.0 * l_arc) * Vec2{std::cos(alpha), -std::sin(alpha)};
    }
    if (x1 < 0.0) p.x = -p.x;
    return p;
}

// ---------------------------------------------------------------------------
// builders

DeformationField build_plate(const MaterialSpec& spec, double alpha) {
    validate(spec);
    validate_angle(alpha);
    DeformationField f;
    f.kind = FieldKind::Plate;
    f.spec = spec;
    f.alpha = alpha;
    return f;
}

DeformationField build_cpa(const MaterialSpec& spec, double alpha, double beta) {
    validate(spec);
    validate_angle(alpha);
    if (!(beta > alpha) || !(beta < kPi / 2.0)) {
        throw std::domain_error("build_cpa: beta must be in (alpha, pi/2)");
    }
    if (!fold_admissible(alpha, beta)) {
        throw AdmissibilityError("build_cpa: beta exceeds beta_eq(alpha), d*cos(beta) < 1");
    }
    const FoldKinematics k = kinematics(alpha, beta);
    if (k.zeta > spec.L / (2.0 * spec.h) * (1.0 + 1e-12)) {
        throw AdmissibilityError("build_cpa: zeta > L/(2h), fold does not fit the sample");
    }
    DeformationField f;
    f.kind = FieldKind::Cpa;
    f.spec = spec;
    f.alpha = alpha;
    f.beta = beta;
    f.zeta = k.zeta;
    f.d = k.d;
    return f;
}

void validate_params(const MaterialSpec& spec, double alpha, const ConstructionParams& p) {
    validate(spec);
    validate_angle(alpha);
    if (alpha > kPi / 4.0) {
        throw ConstraintError(
            "build_multilayer: alpha > pi/4; compose two half-angle folds instead");
    }
    if (p.n < 1 || p.n > spec.N) {
        throw ConstraintError("build_multilayer: n must satisfy 1 <= n <= N");
    }
    if (!(p.beta > alpha)) {
        throw ConstraintError("build_multilayer: beta must exceed alpha");
    }
    if (!(p.beta < kPi / 2.0)) {
        throw ConstraintError("build_multilayer: beta must be below pi/2");
    }
    if (!fold_admissible(alpha, p.beta)) {
        throw AdmissibilityError("build_multilayer: beta exceeds beta_eq(alpha)");
    }
    if (p.boundaries.size() != static_cast<size_t>(p.n) + 1) {
        throw ConstraintError("build_multilayer: boundaries must list n+1 ordinates");
    }
    const double reltol = 1e-9 * spec.h;
    if (std::abs(p.boundaries.front()) > reltol || std::abs(p.boundaries.back() - spec.h) > reltol) {
        throw ConstraintError("build_multilayer: boundaries must start at 0 and end at h");
    }
    const double grid = spec.layer_grid();
    for (int j = 1; j < p.n; ++j) {
        const double bj = p.boundaries[j];
        if (!(bj > p.boundaries[j - 1])) {
            throw ConstraintError("build_multilayer: boundaries must be strictly increasing");
        }
        const double cells = bj / grid;
        if (std::abs(cells - std::round(cells)) > 1e-9) {
            throw ConstraintError("build_multilayer: interior boundaries must lie on the h/N grid");
        }
    }
    if (!(p.boundaries[p.n] > p.boundaries[p.n - 1])) {
        throw ConstraintError("build_multilayer: boundaries must be strictly increasing");
    }
    const double hmax = p.max_layer_thickness();
    if (hmax > 2.0 * spec.h / p.n * (1.0 + 1e-12)) {
        throw ConstraintError("build_multilayer: layer thickness h_j exceeds 2h/n");
    }
    if (p.l_arc * (1.0 + 1e-12) < 2.0 * p.beta * spec.h / p.n) {
        throw ConstraintError("build_multilayer: l_arc below 2*beta*h/n");
    }
    if (p.l_arc > spec.L / 8.0 * (1.0 + 1e-12)) {
        throw ConstraintError("build_multilayer: l_arc above L/8");
    }
    const FoldKinematics k = kinematics(alpha, p.beta);
    if (k.zeta * spec.h > spec.L / 4.0 * (1.0 + 1e-12)) {
        throw ConstraintError("build_multilayer: down-slope length zeta*h above L/4");
    }
}

DeformationField build_multilayer(const MaterialSpec& spec, double alpha,
                                  const ConstructionParams& params, bool validate_constraints) {
    if (validate_constraints) {
        validate_params(spec, alpha, params);
    } else {
        validate(spec);
        validate_angle(alpha);
    }
    const FoldKinematics k = kinematics(alpha, params.beta);
    DeformationField f;
    f.kind = FieldKind::Multilayer;
    f.spec = spec;
    f.alpha = alpha;
    f.beta = params.beta;
    f.zeta = k.zeta;
    f.d = k.d;
    f.params = params;
    f.curves.reserve(static_cast<size_t>(params.n));
    for (int j = 0; j < params.n; ++j) {
        LayerCurve c;
        c.alpha = alpha;
        c.beta = params.beta;
        c.l_arc = params.l_arc;
        c.b = params.boundaries[j];
        c.l_down = k.zeta * (spec.h - c.b);
        c.base_y = k.d * c.b;
        c.init_piece_endpoints();
        f.curves.push_back(c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// DeformationField

void DeformationField::check_domain(double x1, double x2) const {
    if (!(x1 >= -spec.L) || !(x1 <= spec.L) || !(x2 >= 0.0) || !(x2 < spec.h)) {
        throw std::domain_error("DeformationField: (x1, x2) outside [-L, L] x [0, h)");
    }
}

int DeformationField::layer_count() const {
    return kind == FieldKind::Multilayer ? params.n : 1;
}

int DeformationField::layer_index(double x2) const {
    if (kind != FieldKind::Multilayer) return 0;
    // layer j owns [b_j, b_{j+1})
    int j = static_cast<int>(std::upper_bound(params.boundaries.begin(), params.boundaries.end(), x2) -
                             params.boundaries.begin()) - 1;
    return std::clamp(j, 0, params.n - 1);
}

std::vector<std::pair<double, double>> DeformationField::strips() const {
    std::vector<std::pair<double, double>> s;
    if (kind == FieldKind::Multilayer) {
        for (int j = 0; j < params.n; ++j) {
            s.emplace_back(params.boundaries[j], params.boundaries[j + 1]);
        }
    } else {
        s.emplace_back(0.0, spec.h);
    }
    return s;
}

std::vector<double> DeformationField::interfaces() const {
    std::vector<double> v;
    if (kind == FieldKind::Multilayer) {
        for (int j = 1; j < params.n; ++j) v.push_back(params.boundaries[j]);
    }
    return v;
}

Vec2 DeformationField::eval(double x1, double x2) const {
    check_domain(x1, x2);
    switch (kind) {
        case FieldKind::Plate: {
            const double R = spec.L / (2.0 * alpha);
            Vec2 v;
            double theta;
            if (std::abs(x1) < spec.L / 2.0) {
                const double t = 2.0 * alpha * x1 / spec.L;
                v = Vec2{R * std::sin(t), R * std::cos(t)};
                theta = -t;
            } else {
                const double s = x1 < 0.0 ? -1.0 : 1.0;
                const double t = s * alpha;  // arc angle parameter at +-L/2
                const Vec2 vend{R * std::sin(t), R * std::cos(t)};
                theta = -t;
                v = vend + (x1 - s * spec.L / 2.0) * Vec2{std::cos(theta), std::sin(theta)};
            }
            return v + x2 * Vec2{-std::sin(theta), std::cos(theta)};
        }
        case FieldKind::Cpa: {
            if (std::abs(x1) < zeta * (spec.h - x2)) {
                return {x1 * std::cos(beta), std::abs(x1) * std::sin(beta) + d * x2};
            }
            const double sgn = x1 < 0.0 ? -1.0 : 1.0;
            return {x1 * std::cos(alpha) + (x2 - spec.h) * std::sin(alpha) * sgn,
                    -std::abs(x1) * std::sin(alpha) + (x2 - spec.h) * std::cos(alpha) + d * spec.h};
        }
        case FieldKind::Multilayer: {
            const int j = layer_index(x2);
            const LayerCurve& c = curves[j];
            const double phi = c.angle(x1);
            return c.point(x1) + (x2 - c.b) * Vec2{-std::sin(phi), std::cos(phi)};
        }
    }
    throw std::logic_error("unreachable");
}

Mat2 DeformationField::eval_grad(double x1, double x2) const {
    check_domain(x1, x2);
    switch (kind) {
        case FieldKind::Plate: {
            if (std::abs(x1) < spec.L / 2.0) {
                const double theta = -2.0 * alpha * x1 / spec.L;
                const double stretch = 1.0 + 2.0 * alpha * x2 / spec.L;
                const Mat2 r = rotation(theta);
                return Mat2::from_columns(r * Vec2{stretch, 0.0}, r * Vec2{0.0, 1.0});
            }
            return rotation(x1 < 0.0 ? alpha : -alpha);
        }
        case FieldKind::Cpa: {
            if (std::abs(x1) < zeta * (spec.h - x2)) {
                return {std::cos(beta), 0.0, std::sin(beta), d};
            }
            return rotation(x1 < 0.0 ? alpha : -alpha);
        }
        case FieldKind::Multilayer: {
            const int j = layer_index(x2);
            const LayerCurve& c = curves[j];
            const double phi = c.angle(x1);
            const double stretch = 1.0 - (x2 - c.b) * c.angle_slope(x1);
            const Mat2 r = rotation(phi);
            return Mat2::from_columns(r * Vec2{stretch, 0.0}, r * Vec2{0.0, 1.0});
        }
    }
    throw std::logic_error("unreachable");
}

Vec2 DeformationField::trace_above(int i, double x1) const {
    return curves[i].point(x1);
}

Vec2 DeformationField::trace_below(int i, double x1) const {
    const LayerCurve& c = curves[i - 1];
    const double phi = c.angle(x1);
    const double hj = params.boundaries[i] - params.boundaries[i - 1];
    return c.point(x1) + hj * Vec2{-std::sin(phi), std::cos(phi)};
}

double DeformationField::interface_window(int i) const {
    // the jump closes once the layer below has reached its affine tail
    return curves[i - 1].l_down + 2.0 * params.l_arc;
}

std::vector<double> DeformationField::x1_cells(double x2, int nx) const {
    const double L = spec.L;
    struct Piece {
        double lo, hi;
        bool curved;
    };
    std::vector<Piece> pieces;
    auto add_sym = [&](double a, double b, bool curved) {
        // positive-side piece [a, b] plus its mirror
        a = std::clamp(a, 0.0, L);
        b = std::clamp(b, 0.0, L);
        if (b - a <= 0.0) return;
        pieces.push_back({a, b, curved});
        pieces.push_back({-b, -a, curved});
    };
    switch (kind) {
        case FieldKind::Plate:
            pieces.push_back({-L / 2.0, L / 2.0, true});
            add_sym(L / 2.0, L, false);
            break;
        case FieldKind::Cpa: {
            const double w = std::min(zeta * (spec.h - x2), L);
            if (w > 0.0) pieces.push_back({-w, w, true});
            add_sym(w, L, false);
            break;
        }
        case FieldKind::Multilayer: {
            const LayerCurve& c = curves[layer_index(x2)];
            pieces.push_back({-std::min(c.l_arc, L), std::min(c.l_arc, L), true});
            add_sym(c.l_arc, c.l_down + c.l_arc, false);
            add_sym(c.l_down + c.l_arc, c.l_down + 2.0 * c.l_arc, true);
            add_sym(c.l_down + 2.0 * c.l_arc, L / 2.0, false);
            add_sym(L / 2.0, L, false);
            break;
        }
    }
    double curved_len = 0.0;
    for (const Piece& p : pieces) {
        if (p.curved) curved_len += p.hi - p.lo;
    }
    std::vector<double> edges;
    for (const Piece& p : pieces) {
        int m = 2;
        if (p.curved && curved_len > 0.0) {
            m = std::max(2, static_cast<int>(std::lround(nx * (p.hi - p.lo) / curved_len)));
        }
        for (int i = 0; i < m; ++i) {
            edges.push_back(p.lo + (p.hi - p.lo) * i / m);
        }
        edges.push_back(p.hi);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double a, double b) { return std::abs(a - b) < 1e-15 * L; }),
                edges.end());
    return edges;
}

}  // namespace plyfold
