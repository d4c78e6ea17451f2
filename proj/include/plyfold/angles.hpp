#pragma once

#include "plyfold/core.hpp"

namespace plyfold {

/// Kinematic quantities of the fold at angles (alpha, beta).
/// zeta is the down-slope width factor, d the vertical opening factor.
/// The pair is admissible for the delaminated construction iff
/// d*cos(beta) >= 1, equivalently beta <= beta_eq(alpha).
struct FoldKinematics {
    double alpha = 0.0;
    double beta = 0.0;
    double zeta = 0.0;
    double d = 0.0;
    bool admissible = false;
};

/// f_alpha(beta) = sin((alpha+beta)/2) / sin((beta-alpha)/2) * cos(beta),
/// strictly decreasing in beta on (alpha, pi/2] with f_alpha(pi/2) = 0.
/// Throws std::domain_error unless 0 < alpha < beta <= pi/2.
double f_alpha(double alpha, double beta);

/// The unique root of f_alpha(beta) = 1 in (alpha, pi/2), by bisection on
/// the strictly decreasing f_alpha. Increasing in alpha; behaves like
/// (4 alpha)^(1/3) as alpha -> 0.
double beta_eq(double alpha, double tol = 1e-12);

/// zeta and d evaluated through the cancellation-free half-angle forms:
///   cos(alpha) - cos(beta) = 2 sin((alpha+beta)/2) sin((beta-alpha)/2)
///   d = sin((alpha+beta)/2) / sin((beta-alpha)/2)
/// Throws std::domain_error unless 0 < alpha < beta < pi/2.
FoldKinematics kinematics(double alpha, double beta);

/// Admissibility predicate with a one-sided tolerance at the beta_eq
/// boundary, so beta = beta_eq (resolved by bisection) is always admitted.
bool fold_admissible(double alpha, double beta, double tol = 1e-9);

}  // namespace plyfold
