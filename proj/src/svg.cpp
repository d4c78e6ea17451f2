#include "plyfold/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace plyfold {

SvgPlot::SvgPlot(std::string title, std::string xlabel, std::string ylabel, bool logx, bool logy)
    : title_(std::move(title)),
      xlabel_(std::move(xlabel)),
      ylabel_(std::move(ylabel)),
      logx_(logx),
      logy_(logy) {}

void SvgPlot::add_series(const std::vector<double>& x, const std::vector<double>& y,
                         const std::string& color) {
    if (x.size() != y.size()) throw std::invalid_argument("SvgPlot: mismatched series");
    series_.push_back({x, y, color});
}

namespace {

double map_coord(double v, bool logscale) {
    if (!logscale) return v;
    return std::log10(std::max(v, 1e-300));
}

std::vector<double> ticks_for(double lo, double hi, bool logscale) {
    std::vector<double> t;
    if (logscale) {
        const int d0 = static_cast<int>(std::ceil(lo - 1e-9));
        const int d1 = static_cast<int>(std::floor(hi + 1e-9));
        for (int d = d0; d <= d1; ++d) t.push_back(d);
        if (t.empty()) t = {lo, hi};
    } else {
        const int n = 5;
        for (int i = 0; i <= n; ++i) t.push_back(lo + (hi - lo) * i / n);
    }
    return t;
}

std::string tick_label(double t, bool logscale) {
    std::ostringstream os;
    if (logscale) {
        os << "1e" << static_cast<int>(std::lround(t));
    } else {
        os.precision(3);
        os << t;
    }
    return os.str();
}

}  // namespace

std::string SvgPlot::render(int width, int height) const {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const Series& s : series_) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (logx_ && s.x[i] <= 0) continue;
            if (logy_ && s.y[i] <= 0) continue;
            xlo = std::min(xlo, map_coord(s.x[i], logx_));
            xhi = std::max(xhi, map_coord(s.x[i], logx_));
            ylo = std::min(ylo, map_coord(s.y[i], logy_));
            yhi = std::max(yhi, map_coord(s.y[i], logy_));
        }
    }
    if (!(xhi > xlo)) {
        xlo -= 0.5;
        xhi = xlo + 1.0;
    }
    if (!(yhi > ylo)) {
        ylo -= 0.5;
        yhi = ylo + 1.0;
    }
    const double ml = 70, mr = 20, mt = 40, mb = 50;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto X = [&](double v) { return ml + (map_coord(v, logx_) - xlo) / (xhi - xlo) * pw; };
    auto Y = [&](double v) { return mt + ph - (map_coord(v, logy_) - ylo) / (yhi - ylo) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
       << title_ << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
       << "\" stroke=\"black\"/>\n";
    for (double t : ticks_for(xlo, xhi, logx_)) {
        const double px = ml + (t - xlo) / (xhi - xlo) * pw;
        os << "<line x1=\"" << px << "\" y1=\"" << mt + ph << "\" x2=\"" << px << "\" y2=\""
           << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px << "\" y=\"" << mt + ph + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(t, logx_) << "</text>\n";
    }
    for (double t : ticks_for(ylo, yhi, logy_)) {
        const double py = mt + ph - (t - ylo) / (yhi - ylo) * ph;
        os << "<line x1=\"" << ml - 5 << "\" y1=\"" << py << "\" x2=\"" << ml << "\" y2=\"" << py
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(t, logy_) << "</text>\n";
    }
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel_ << "</text>\n";
    os << "<text x=\"16\" y=\"" << mt + ph / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " << mt + ph / 2
       << ")\">" << ylabel_ << "</text>\n";
    for (const Series& s : series_) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (logx_ && s.x[i] <= 0) continue;
            if (logy_ && s.y[i] <= 0) continue;
            if (!first) os << " ";
            os << X(s.x[i]) << "," << Y(s.y[i]);
            first = false;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string field_outline_svg(const DeformationField& field, int samples_per_curve) {
    const double L = field.spec.L;
    std::vector<std::vector<Vec2>> lines;
    const auto strips = field.strips();
    const double eps = 1e-9 * field.spec.h;
    for (const auto& [lo, hi] : strips) {
        for (double y : {lo, hi - eps}) {
            std::vector<Vec2> line;
            line.reserve(samples_per_curve + 1);
            for (int i = 0; i <= samples_per_curve; ++i) {
                const double x1 = -L + 2.0 * L * i / samples_per_curve;
                line.push_back(field.eval(x1, y));
            }
            lines.push_back(std::move(line));
        }
    }
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const auto& line : lines) {
        for (const Vec2& p : line) {
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, p.y);
            yhi = std::max(yhi, p.y);
        }
    }
    const double pad = 0.05 * std::max(xhi - xlo, yhi - ylo);
    xlo -= pad;
    xhi += pad;
    ylo -= pad;
    yhi += pad;
    const int width = 900;
    const int height = std::max(200, static_cast<int>(width * (yhi - ylo) / (xhi - xlo)));
    auto X = [&](double v) { return (v - xlo) / (xhi - xlo) * width; };
    auto Y = [&](double v) { return height - (v - ylo) / (yhi - ylo) * height; };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& line : lines) {
        os << "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1\" points=\"";
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) os << " ";
            os << X(line[i].x) << "," << Y(line[i].y);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace plyfold
