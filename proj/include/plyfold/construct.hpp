#pragma once

#include "plyfold/angles.hpp"
#include "plyfold/core.hpp"

namespace plyfold {

/// Free parameters of the delaminated fold construction: inner fold angle
/// beta, number of delaminated layers n, corner arc length l_arc, and the
/// layer boundaries 0 = b_0 < b_1 < ... < b_n = h (interior boundaries on
/// the grid (h/N)*{1..N-1}).
struct ConstructionParams {
    double beta = 0.0;
    int n = 1;
    double l_arc = 0.0;
    std::vector<double> boundaries;  // size n+1, boundaries[0] = 0, boundaries[n] = h

    double layer_thickness(int j) const { return boundaries[j + 1] - boundaries[j]; }
    double max_layer_thickness() const;
};

/// Deterministic near-equal partition of (0, h) into n layers on the
/// (h/N)-grid; interior grid indices are the nearest integers to j*N/n,
/// ties resolved to the lower grid point. All gaps are <= 2h/n.
std::vector<double> choose_boundaries(const MaterialSpec& spec, int n);

/// Arc-length parametrized midline of one layer of the delaminated fold:
/// a central arc of radius l_arc/beta, straight down-slopes at angle
/// +/-beta of half-width l_down, corner arcs of radius l_arc/(alpha+beta),
/// and affine tails at angle -/+alpha. Odd symmetry in x1 for the first
/// component. Anchored at (0, base_y) = (0, d*b).
struct LayerCurve {
    double alpha = 0.0;
    double beta = 0.0;
    double l_arc = 0.0;
    double l_down = 0.0;  // zeta * (h - b)
    double b = 0.0;       // layer bottom ordinate
    double base_y = 0.0;  // d * b
    Vec2 end_a, end_b, end_c;  // cached piece endpoints on the positive side

    void init_piece_endpoints();

    double angle(double x1) const;      // orientation phi(x1), odd in x1
    double angle_slope(double x1) const;  // d phi / d x1 (even in x1)
    Vec2 point(double x1) const;        // f(x1)
    Vec2 tangent(double x1) const { double p = angle(x1); return {std::cos(p), std::sin(p)}; }
};

enum class FieldKind { Plate, Cpa, Multilayer };

std::string to_string(FieldKind kind);

/// An evaluable deformation of (-L,L) x [0,h): the pure plate bend, the
/// continuous piecewise-affine fold, or the rounded multilayer delaminated
/// fold. Immutable after construction; eval/eval_grad are pure.
class DeformationField {
public:
    FieldKind kind = FieldKind::Plate;
    MaterialSpec spec;
    double alpha = 0.0;
    // Cpa and Multilayer
    double beta = 0.0;
    double zeta = 0.0;
    double d = 0.0;
    // Multilayer only
    ConstructionParams params;
    std::vector<LayerCurve> curves;

    Vec2 eval(double x1, double x2) const;
    Mat2 eval_grad(double x1, double x2) const;

    int layer_count() const;
    /// Layer strips [lo, hi); a single strip for Plate/Cpa.
    std::vector<std::pair<double, double>> strips() const;
    /// Interior interface ordinates b_1 .. b_{n-1} (empty unless Multilayer).
    std::vector<double> interfaces() const;

    /// One-sided interface traces: above is u(x1, b_i), below the limit
    /// from the layer underneath.
    Vec2 trace_above(int interface_index, double x1) const;
    Vec2 trace_below(int interface_index, double x1) const;
    /// Half-width of the analytic jump support at interface i
    /// (down-slope of the layer below plus both corner arcs).
    double interface_window(int interface_index) const;

    /// Midpoint-quadrature cells along x1 for the row at height x2: cell
    /// edges are split at every gradient breakpoint of that row so each
    /// cell sees a smooth integrand, and the nx budget is spent on the
    /// curved pieces (straight pieces carry an exactly zero/constant
    /// integrand).
    std::vector<double> x1_cells(double x2, int nx) const;

private:
    void check_domain(double x1, double x2) const;
    int layer_index(double x2) const;
};

DeformationField build_plate(const MaterialSpec& spec, double alpha);

DeformationField build_cpa(const MaterialSpec& spec, double alpha, double beta);

/// Builds the rounded multilayer delaminated fold. Throws
/// AdmissibilityError when beta > beta_eq(alpha), ConstraintError naming
/// the violated inequality otherwise. `validate = false` bypasses the
/// fitting constraints (negative-control tests only).
DeformationField build_multilayer(const MaterialSpec& spec, double alpha,
                                  const ConstructionParams& params, bool validate = true);

/// Validates params against the construction constraints
///   alpha < beta <= beta_eq(alpha),   h_j <= 2h/n,
///   2 beta h / n <= l_arc <= L/8,     zeta h <= L/4,
/// plus well-formedness of the boundary list.
void validate_params(const MaterialSpec& spec, double alpha, const ConstructionParams& params);

}  // namespace plyfold
