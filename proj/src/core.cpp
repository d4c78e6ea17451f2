#include "plyfold/core.hpp"

#include <algorithm>

namespace plyfold {

Mat2 rotation(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, -s, s, c};
}

double dist_SO2_squared(const Mat2& f) {
    const double fro = f.frobenius_sq();
    const double det = f.det();
    // Singular values from the two invariants |F|^2 and det F.
    const double p = std::sqrt(std::max(0.0, fro + 2.0 * std::abs(det)));
    const double q = std::sqrt(std::max(0.0, fro - 2.0 * std::abs(det)));
    const double s1 = 0.5 * (p + q);
    const double s2 = 0.5 * (p - q);
    if (det >= 0.0) {
        return (s1 - 1.0) * (s1 - 1.0) + (s2 - 1.0) * (s2 - 1.0);
    }
    return (s1 - 1.0) * (s1 - 1.0) + (s2 + 1.0) * (s2 + 1.0);
}

void validate(const MaterialSpec& spec) {
    if (!(spec.h > 0.0) || !std::isfinite(spec.h)) {
        throw std::invalid_argument("MaterialSpec: h must be positive and finite");
    }
    if (!(spec.L > 0.0) || !std::isfinite(spec.L)) {
        throw std::invalid_argument("MaterialSpec: L must be positive and finite");
    }
    if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) {
        throw std::invalid_argument("MaterialSpec: gamma must be positive and finite");
    }
    if (spec.N < 1) {
        throw std::invalid_argument("MaterialSpec: N must be >= 1");
    }
    if (spec.h > spec.L / 4.0) {
        throw std::invalid_argument("MaterialSpec: h <= L/4 is required");
    }
}

void validate_angle(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= kPi / 2.0)) {
        throw std::invalid_argument("bend angle alpha must be in (0, pi/2]");
    }
}

BendAngle::BendAngle(double a) : alpha(a) { validate_angle(a); }

}  // namespace plyfold
