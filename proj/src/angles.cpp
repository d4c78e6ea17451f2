#include "plyfold/angles.hpp"

namespace plyfold {

namespace {

void check_pair(double alpha, double beta, double beta_max) {
    if (!(alpha > 0.0) || !(alpha < kPi / 2.0)) {
        throw std::domain_error("f_alpha: alpha must be in (0, pi/2)");
    }
    if (!(beta > alpha)) {
        throw std::domain_error("f_alpha: beta must exceed alpha");
    }
    if (!(beta <= beta_max)) {
        throw std::domain_error("f_alpha: beta out of range");
    }
}

}  // namespace

double f_alpha(double alpha, double beta) {
    check_pair(alpha, beta, kPi / 2.0);
    const double sp = std::sin(0.5 * (alpha + beta));
    const double sm = std::sin(0.5 * (beta - alpha));
    return sp / sm * std::cos(beta);
}

double beta_eq(double alpha, double tol) {
    if (!(alpha > 0.0) || !(alpha < kPi / 2.0)) {
        throw std::domain_error("beta_eq: alpha must be in (0, pi/2)");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("beta_eq: tol must be positive");
    }
    const double eps = 1e-14 * kPi;
    double lo = alpha + eps;   // f -> +inf
    double hi = kPi / 2.0 - eps;  // f -> ~0
    // f is strictly decreasing, so plain bisection is unconditionally
    // convergent. Root stays strictly inside (alpha, pi/2).
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f_alpha(alpha, mid) > 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

FoldKinematics kinematics(double alpha, double beta) {
    check_pair(alpha, beta, std::nextafter(kPi / 2.0, 0.0));
    FoldKinematics k;
    k.alpha = alpha;
    k.beta = beta;
    const double sp = std::sin(0.5 * (alpha + beta));
    const double sm = std::sin(0.5 * (beta - alpha));
    const double denom = 2.0 * sp * sm;  // cos(alpha) - cos(beta)
    k.zeta = std::sin(alpha) / denom;
    k.d = sp / sm;
    k.admissible = k.d * std::cos(beta) >= 1.0 - 1e-9;
    return k;
}

bool fold_admissible(double alpha, double beta, double tol) {
    if (!(beta > alpha) || !(beta < kPi / 2.0)) return false;
    return f_alpha(alpha, beta) >= 1.0 - tol;
}

}  // namespace plyfold
