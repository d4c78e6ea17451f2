#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace plyfold {

/// Construction parameters violate one of the fold-angle admissibility
/// conditions (e.g. the layers would interpenetrate).
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Construction parameters violate a geometric fitting constraint
/// (arc length, down-slope width, layer grid).
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
    // counterclockwise rotation by 90 degrees
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 from_columns(const Vec2& c1, const Vec2& c2) {
        return {c1.x, c2.x, c1.y, c2.y};
    }

    double det() const { return a11 * a22 - a12 * a21; }
    double frobenius_sq() const { return a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22; }

    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Vec2 operator*(const Vec2& v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }
};

inline double frobenius_dist(const Mat2& a, const Mat2& b) {
    return std::sqrt((a - b).frobenius_sq());
}

/// The two-dimensional rotation of angle phi (counterclockwise).
Mat2 rotation(double phi);

/// Squared Frobenius distance of F to the rotation group SO(2), from the
/// closed-form 2x2 singular values. With singular values s1 >= s2 >= 0:
/// (s1-1)^2 + (s2-1)^2 when det F >= 0, (s1-1)^2 + (s2+1)^2 otherwise.
double dist_SO2_squared(const Mat2& f);

/// Geometry and material parameters of the layered sample. The sample
/// occupies (-L, L) x (0, h) with N plies; gamma is the delamination
/// energy per unit interface length (carries length units).
struct MaterialSpec {
    double h = 1.0;
    double L = 10.0;
    int N = 8;
    double gamma = 1e-6;

    double layer_grid() const { return h / static_cast<double>(N); }
};

/// Throws std::invalid_argument unless h > 0, L > 0, gamma > 0, N >= 1
/// and h <= L/4 (required by both scaling bounds).
void validate(const MaterialSpec& spec);

/// Prescribed bending half-angle, in (0, pi/2].
struct BendAngle {
    double alpha;
    explicit BendAngle(double a);
};

/// Validates alpha in (0, pi/2].
void validate_angle(double alpha);

struct EnergyBreakdown {
    double elastic = 0.0;
    double delamination = 0.0;
    double total = 0.0;
    std::vector<double> jump_lengths;  // measured delaminated length per interface
};

/// Compensated (Kahan) accumulator so parallel partial sums reduce to
/// run-to-run identical totals.
class KahanSum {
public:
    void add(double v) {
        double y = v - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

constexpr double kPi = 3.14159265358979323846;

}  // namespace plyfold
