#include "fracschrod/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace fracschrod {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// 1-2-5 spacing giving about five intervals
double tick_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    const double nice = r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0;
    return nice * mag;
}

struct Range {
    double lo, hi;
};

Range padded(double lo, double hi) {
    if (hi - lo <= 0.0) {
        const double pad = lo == 0.0 ? 1.0 : 0.1 * std::abs(lo);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const std::vector<Curve>& curves, const Axes& axes) {
    if (curves.empty()) throw std::invalid_argument("render_svg: no curves");
    double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
    for (const auto& c : curves) {
        if (c.x.empty() || c.x.size() != c.y.size()) {
            throw std::invalid_argument("render_svg: curve '" + c.label + "' is empty or ragged");
        }
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) {
                throw std::invalid_argument("render_svg: non-finite value in '" + c.label + "'");
            }
            x_lo = std::min(x_lo, c.x[i]);
            x_hi = std::max(x_hi, c.x[i]);
            y_lo = std::min(y_lo, c.y[i]);
            y_hi = std::max(y_hi, c.y[i]);
        }
    }
    const Range xr = padded(x_lo, x_hi);
    const Range yr = padded(y_lo, y_hi);
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
        kWidth, kHeight, kWidth, kHeight);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                       kWidth, kHeight);
    out += fmt::format("<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       kWidth / 2, escape(axes.title));
    out += fmt::format(
        "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" stroke=\"black\"/>\n",
        kLeft, kTop, pw, ph);

    const double xs = tick_step(xr.hi - xr.lo);
    for (double t = std::ceil(xr.lo / xs) * xs; t <= xr.hi; t += xs) {
        const double tick = std::abs(t) < 1e-12 * xs ? 0.0 : t;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>\n",
                           px(tick), kTop + ph, kTop + ph + 5);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:g}</text>\n", px(tick),
                           kTop + ph + 18, tick);
    }
    const double ys = tick_step(yr.hi - yr.lo);
    for (double t = std::ceil(yr.lo / ys) * ys; t <= yr.hi; t += ys) {
        const double tick = std::abs(t) < 1e-12 * ys ? 0.0 : t;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n",
                           kLeft - 5, py(tick), kLeft);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:g}</text>\n", kLeft - 8,
                           py(tick) + 4, tick);
    }
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2,
                       kHeight - 12, escape(axes.x_label));
    out += fmt::format(
        "<text x=\"16\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0:.1f})\">{1}</text>\n",
        kTop + ph / 2, escape(axes.y_label));

    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& c = curves[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        std::string points;
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (c.steps && i > 0) points += fmt::format("{:.2f},{:.2f} ", px(c.x[i]), py(c.y[i - 1]));
            points += fmt::format("{:.2f},{:.2f} ", px(c.x[i]), py(c.y[i]));
        }
        if (!points.empty()) points.pop_back();
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                           colour, points);
        const double ly = kTop + 14 + 16 * static_cast<double>(k);
        out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" "
                           "stroke-width=\"2\"/>\n",
                           kLeft + pw - 150, ly, kLeft + pw - 128, colour);
        out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", kLeft + pw - 122, ly + 4,
                           escape(c.label));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace fracschrod
