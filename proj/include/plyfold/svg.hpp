#pragma once

#include "plyfold/construct.hpp"

#include <string>
#include <vector>

namespace plyfold {

/// Minimal standalone SVG line plot: polyline series over two labeled
/// axes, linear or log10 scaling per axis, decade/step ticks. No external
/// assets.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel, bool logx, bool logy);

    void add_series(const std::vector<double>& x, const std::vector<double>& y,
                    const std::string& color);
    std::string render(int width = 720, int height = 480) const;

private:
    struct Series {
        std::vector<double> x, y;
        std::string color;
    };
    std::string title_, xlabel_, ylabel_;
    bool logx_, logy_;
    std::vector<Series> series_;
};

/// Outline of the deformed sample: every layer's bottom and top offset
/// curve (plus branch images for the closed-form fields).
std::string field_outline_svg(const DeformationField& field, int samples_per_curve = 512);

}  // namespace plyfold
