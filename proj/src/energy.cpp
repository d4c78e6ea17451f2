#include "plyfold/energy.hpp"

#include <algorithm>

namespace plyfold {

void validate(const QuadratureSettings& q) {
    if (q.nx < 16) throw std::invalid_argument("QuadratureSettings: nx must be >= 16");
    if (q.ny_per_layer < 4) throw std::invalid_argument("QuadratureSettings: ny_per_layer must be >= 4");
}

double elastic_energy(const DeformationField& field, const QuadratureSettings& q) {
    validate(q);
    const auto strips = field.strips();
    // only the cpa branch line moves with the row height
    const bool row_dependent_cells = field.kind == FieldKind::Cpa;
    std::vector<double> per_strip(strips.size(), 0.0);
    for (size_t k = 0; k < strips.size(); ++k) {
        const auto [lo, hi] = strips[k];
        const double dy = (hi - lo) / q.ny_per_layer;
        std::vector<double> cached;
        if (!row_dependent_cells) cached = field.x1_cells(0.5 * (lo + hi), q.nx);
        KahanSum acc;
        std::vector<double> row_edges;
        for (int iy = 0; iy < q.ny_per_layer; ++iy) {
            const double y = lo + (iy + 0.5) * dy;
            const std::vector<double>* edges = &cached;
            if (row_dependent_cells) {
                row_edges = field.x1_cells(y, q.nx);
                edges = &row_edges;
            }
            for (size_t i = 0; i + 1 < edges->size(); ++i) {
                const double w = (*edges)[i + 1] - (*edges)[i];
                const double xm = 0.5 * ((*edges)[i] + (*edges)[i + 1]);
                acc.add(dist_SO2_squared(field.eval_grad(xm, y)) * w * dy);
            }
        }
        per_strip[k] = acc.value();
    }
    KahanSum total;
    for (double v : per_strip) total.add(v);
    return total.value();
}

namespace {

double trace_gap(const DeformationField& f, int i, double x1) {
    return (f.trace_above(i, x1) - f.trace_below(i, x1)).norm();
}

// locate the open/closed transition between a and b (one side open)
double refine_edge(const DeformationField& f, int i, double a, double b, bool a_open,
                   double threshold, double tol) {
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const bool open = trace_gap(f, i, mid) > threshold;
        if (open == a_open) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

DelamMeasurement delamination_energy(const DeformationField& field, int samples_per_interface,
                                     double threshold) {
    DelamMeasurement out;
    if (field.kind != FieldKind::Multilayer || field.params.n <= 1) {
        return out;
    }
    if (samples_per_interface < 8) {
        throw std::invalid_argument("delamination_energy: samples_per_interface must be >= 8");
    }
    const double L = field.spec.L;
    const double edge_tol = 1e-8 * L;
    const int n_if = field.params.n - 1;
    KahanSum energy;
    for (int i = 1; i <= n_if; ++i) {
        // sampling grid: coarse over the whole sample, dense inside the
        // analytic jump window
        const double w = std::min(field.interface_window(i) * 1.02, L);
        std::vector<double> xs;
        xs.reserve(2 * static_cast<size_t>(samples_per_interface) + 4);
        for (int s = 0; s <= samples_per_interface; ++s) {
            xs.push_back(-L + 2.0 * L * s / samples_per_interface);
            xs.push_back(-w + 2.0 * w * s / samples_per_interface);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

        KahanSum len;
        bool prev_open = trace_gap(field, i, xs.front()) > threshold;
        double open_start = prev_open ? xs.front() : 0.0;
        for (size_t s = 1; s < xs.size(); ++s) {
            const bool open = trace_gap(field, i, xs[s]) > threshold;
            if (open != prev_open) {
                const double edge =
                    refine_edge(field, i, xs[s - 1], xs[s], prev_open, threshold, edge_tol);
                if (prev_open) {
                    len.add(edge - open_start);
                } else {
                    open_start = edge;
                }
                prev_open = open;
            }
        }
        if (prev_open) len.add(xs.back() - open_start);
        out.lengths.push_back(len.value());
        energy.add(len.value());
    }
    out.energy = field.spec.gamma * energy.value();
    return out;
}

EnergyBreakdown total_energy(const DeformationField& field, const QuadratureSettings& q,
                             int samples_per_interface) {
    EnergyBreakdown b;
    b.elastic = elastic_energy(field, q);
    DelamMeasurement d = delamination_energy(field, samples_per_interface);
    b.delamination = d.energy;
    b.jump_lengths = std::move(d.lengths);
    b.total = b.elastic + b.delamination;
    return b;
}

double construction_bound(const MaterialSpec& spec, double alpha, const ConstructionParams& params) {
    validate_params(spec, alpha, params);
    const FoldKinematics k = kinematics(alpha, params.beta);
    const double n = params.n;
    return spec.gamma * n * (k.zeta * spec.h + params.l_arc) +
           params.beta * params.beta * spec.h * spec.h * spec.h / (params.l_arc * n * n);
}

}  // namespace plyfold
