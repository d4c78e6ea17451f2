#pragma once

#include "plyfold/construct.hpp"

namespace plyfold {

/// Midpoint tensor rule. Rows never straddle a layer interface and the x1
/// cells are split at every gradient breakpoint of the row.
struct QuadratureSettings {
    int nx = 256;           // x1 samples across the curved pieces
    int ny_per_layer = 8;   // x2 samples per layer strip
};

void validate(const QuadratureSettings& q);

/// Elastic part: per-layer tensor midpoint quadrature of
/// dist_SO2_squared(eval_grad). Converges at second order in both
/// directions to the exact integral.
double elastic_energy(const DeformationField& field, const QuadratureSettings& q);

struct DelamMeasurement {
    double energy = 0.0;                // gamma * sum of lengths
    std::vector<double> lengths;        // per interior interface
};

/// Measured delaminated length per interface: the set where the one-sided
/// traces differ by more than `threshold`, sampled uniformly (densified
/// inside the analytic jump window) with bisection refinement of every
/// open/closed transition to 1e-8 * L.
DelamMeasurement delamination_energy(const DeformationField& field, int samples_per_interface,
                                     double threshold = 1e-10);

EnergyBreakdown total_energy(const DeformationField& field, const QuadratureSettings& q,
                             int samples_per_interface = 256);

/// Closed-form construction energy bound
///   gamma * n * (zeta h + l_arc) + beta^2 h^3 / (l_arc n^2)
/// with unit constant. Throws like build_multilayer on bad params.
double construction_bound(const MaterialSpec& spec, double alpha, const ConstructionParams& params);

}  // namespace plyfold
