#pragma once

#include "plyfold/construct.hpp"

#include <array>

namespace plyfold {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;                    // the measured quantity the check gates on
    std::array<double, 4> witness{};       // check-specific coordinates
    std::string note;
};

struct CertificateReport {
    bool certified = false;
    std::vector<CheckResult> checks;
};

/// Max Frobenius deviation of eval_grad from rotation(-alpha sign(x1))
/// over a 200-point sample of |x1| in [L/2, L] times 4 ordinates per layer.
double check_boundary(const DeformationField& field);

/// Injectivity around the central arc: every layer thickness must not
/// exceed the central arc radius l_arc/beta.
bool check_central_radius(const ConstructionParams& params);

struct SeparationResult {
    double min_ratio = 0.0;   // min |f_j(s) - f_{j+1}(t)| / h_j over adjacent pairs
    int pair = -1;            // j of the minimizing pair
    double s = 0.0, t = 0.0;  // minimizing parameters
};

/// Minimum midline separation between adjacent layers over the jump-open
/// fold region, by a piecewise sample grid followed by alternating
/// golden-section refinement around the grid minimizer. Past the closure
/// point the layers are glued at exact distance h_j, so the scan stops
/// half an arc short of it. A Multilayer field with one layer is
/// vacuously separated (ratio capped to 1e9).
SeparationResult check_layer_separation(const DeformationField& field,
                                        int samples_per_piece = 256);

/// Runs every check applicable to the field kind; certified iff all pass.
CertificateReport certify(const DeformationField& field);

}  // namespace plyfold
