#pragma once

#include "plyfold/energy.hpp"
#include "plyfold/verify.hpp"

namespace plyfold {

enum class RegimeLabel {
    Elastic,
    SharpFoldPartial,
    SharpFoldFull,
    LocalizedFull,
    TotalDelam,
    SmallAngleTotal,
};

std::string to_string(RegimeLabel label);
RegimeLabel regime_from_string(const std::string& s);

struct BoundResult {
    double value = 0.0;
    RegimeLabel label = RegimeLabel::Elastic;
};

/// Upper-bound formula (unit constant)
///   min{ a^2 h^3 / L,
///        max{ a^{1/3} g^{2/3} h^{4/3},  a g^{1/2} h^{3/2} / N^{1/2},
///             a h^4 / (L^2 N^2),        a^2 h^3 / (L N^2) } }
/// together with the achieving branch. Ties pick the lower-angle regime.
BoundResult upper_bound(const MaterialSpec& spec, double alpha);

struct RegimeInterval {
    double lo = 0.0, hi = 0.0;  // half-open [lo, hi)
    RegimeLabel label = RegimeLabel::Elastic;
};

/// Piecewise-in-alpha regime decomposition of (0, pi/2]:
///   h <= gamma N^3        -> elastic, then the a^{1/3} branch only
///   gamma L^4 <  h^5 N^5  -> elastic | a^{1/3} | linear | quadratic
///   gamma L^4 >= h^5 N^5  -> elastic | linear | quadratic
/// with closed-form breakpoints, clipped to (0, pi/2].
std::vector<RegimeInterval> sorted_regimes(const MaterialSpec& spec);

RegimeLabel classify(const MaterialSpec& spec, double alpha);

/// Conditional scaling floor (unit constant): competitors must confine
/// jumps to n_assumed layer interfaces over an interval. n_assumed < 1
/// means N.
double lower_bound(const MaterialSpec& spec, double alpha, int n_assumed = -1);

/// Four-branch optimal delaminated length law {0, a^{1/3} g^{-1/3} h^{4/3} / N,
/// a g^{-1/2} h^{3/2} / N^{3/2}, L}. Requires the sorted-regime case gates
/// h >= gamma N^3, gamma L^4 < h^5 N^5, h^5 < gamma L^4 N^3.
double optimal_delam_length(const MaterialSpec& spec, double alpha);

struct OptimizerSettings {
    int grid_points = 33;       // log-spaced points per coordinate scan
    int rounds = 3;             // descent rounds, window shrinks 4x per round
    QuadratureSettings quad{192, 8};
    int delam_samples = 160;
    int n_scan_max = 40;        // cap on distinct n values per scan
};

struct OptimizeResult {
    bool delaminated = false;   // false: the plate bend won
    bool split = false;         // true: two half-angle folds on L/4 samples
    ConstructionParams params;  // of the (half-)fold when delaminated
    EnergyBreakdown breakdown;  // composite totals (doubled when split)
    double plate_energy = 0.0;
    MaterialSpec fold_spec;     // spec the fold was evaluated on
    double fold_alpha = 0.0;    // alpha/2 when split

    /// Rebuild the optimizer's field (the half-fold when split).
    DeformationField field() const;
};

/// Minimizes measured total energy over the admissible construction set:
/// beta on a log grid spanning (alpha, beta_eq(alpha)] above the
/// zeta h <= L/4 feasibility floor, n in {1..N}, l_arc on a log grid in
/// [2 beta h / n, L/8]; seeded at the closed-form critical values
/// (including max{2a, sqrt(8 c* a h / L)} with c* = 3/2), refined by
/// coordinate descent, and compared against the pure plate bend. Angles
/// above pi/4 are handled by composing two half-angle folds on
/// quarter-length samples.
OptimizeResult optimize_construction(const MaterialSpec& spec, double alpha,
                                     const OptimizerSettings& os = {});

struct MomentRow {
    double alpha = 0.0;
    double energy = 0.0;
    double moment = 0.0;
    RegimeLabel label = RegimeLabel::Elastic;
    bool transition = false;  // first row past the elastic/delaminated crossing
};

struct MomentCurve {
    std::vector<MomentRow> rows;
    double alpha_star = 0.0;  // elastic/delaminated crossing, 0 if absent in range
    bool has_crossing = false;
};

/// Energy and moment along an increasing alpha grid. Analytic mode
/// evaluates the bound formulas; measured mode runs the optimizer per
/// point. The moment is a central difference; analytic mode uses a
/// relative step of 1e-3 of the local spacing, measured mode differences
/// neighboring grid points. The elastic/delaminated crossing is located
/// by bisection and excluded from differencing.
MomentCurve moment_curve(const MaterialSpec& spec, const std::vector<double>& alpha_grid,
                         bool measured, const OptimizerSettings& os = {});

struct SweepDescriptor {
    MaterialSpec base;
    double alpha = 0.1;        // fixed alpha when sweeping a spec parameter
    std::string param = "alpha";  // alpha | gamma | h | L | N
    double lo = 0.0, hi = 0.0;
    int points = 9;
    RegimeLabel declared = RegimeLabel::Elastic;
    double slope_tol = 0.1;
};

struct ScalingPoint {
    double value = 0.0;     // swept parameter value
    double energy = 0.0;    // measured optimized energy
    double upper = 0.0;
    double lower = 0.0;
    RegimeLabel label = RegimeLabel::Elastic;
    OptimizeResult opt;
};

struct ScalingReport {
    std::string param;
    RegimeLabel declared = RegimeLabel::Elastic;
    std::vector<ScalingPoint> points;
    double slope = 0.0;
    double expected = 0.0;
    double max_residual = 0.0;  // max |log E - fit|
    bool regime_ok = false;
    bool slope_ok = false;
};

/// Expected exponent of the declared regime's branch formula in the swept
/// parameter.
double expected_exponent(const std::string& param, RegimeLabel label);

/// Sweeps one parameter over a log grid (all others fixed), optimizing the
/// construction at every point, and fits the log-log slope. Points whose
/// regime classification differs from the declared label set
/// regime_ok = false (flagged, never silently fit away).
ScalingReport verify_scaling(const SweepDescriptor& sweep, const OptimizerSettings& os = {});

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace plyfold
