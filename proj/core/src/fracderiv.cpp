#include "fracschrod/fracderiv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fracschrod {

void SampledFunction::validate() const {
    if (!(dx > 0.0) || !std::isfinite(dx)) throw std::invalid_argument("sampled function needs dx > 0");
    if (values.size() < 4) throw std::invalid_argument("sampled function needs at least 4 samples");
}

std::size_t SampledFunction::index_of(double x) const {
    const double pos = (x - x0) / dx;
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) > 1e-8 * std::max(1.0, std::abs(pos)) || nearest < 0.0 ||
        nearest >= static_cast<double>(values.size())) {
        throw std::out_of_range("evaluation point is not a grid node");
    }
    return static_cast<std::size_t>(nearest);
}

SampledFunction SampledFunction::sample(const std::function<double(double)>& f, double x0,
                                        double dx, std::size_t count) {
    SampledFunction s{x0, dx, std::vector<double>(count)};
    for (std::size_t i = 0; i < count; ++i) s.values[i] = f(s.x(i));
    s.validate();
    return s;
}

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("fractional order must lie in (0, 1]");
    }
}

std::vector<double> gl_weights(FracOrder alpha, std::size_t count) {
    std::vector<double> w(count);
    if (count == 0) return w;
    w[0] = 1.0;
    for (std::size_t k = 1; k < count; ++k) {
        const double kd = static_cast<double>(k);
        w[k] = w[k - 1] * (kd - 1.0 - alpha.value()) / kd;
    }
    return w;
}

namespace {

double gl_at(const std::vector<double>& values, const std::vector<double>& w, std::size_t i,
             double scale) {
    double sum = 0.0;
    for (std::size_t k = 0; k <= i; ++k) sum += w[k] * values[i - k];
    return sum * scale;
}

}  // namespace

double gl_derivative(const SampledFunction& f, FracOrder alpha, double x) {
    f.validate();
    const std::size_t i = f.index_of(x);
    if (i == 0) throw std::out_of_range("gl_derivative: evaluation point must exceed the terminal");
    const auto w = gl_weights(alpha, i + 1);
    return gl_at(f.values, w, i, std::pow(f.dx, -alpha.value()));
}

SampledFunction gl_derivative_all(const SampledFunction& f, FracOrder alpha) {
    f.validate();
    const auto w = gl_weights(alpha, f.values.size());
    const double scale = std::pow(f.dx, -alpha.value());
    SampledFunction out{f.x0, f.dx, std::vector<double>(f.values.size())};
    for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = gl_at(f.values, w, i, scale);
    return out;
}

double power_rule_oracle(double p, FracOrder alpha, double x) {
    if (p < 0.0) throw std::invalid_argument("power_rule_oracle: p must be >= 0");
    if (!(x > 0.0)) throw std::invalid_argument("power_rule_oracle: x must be > 0");
    const double q = p + 1.0 - alpha.value();
    if (q <= 0.0 && std::abs(q - std::round(q)) < 1e-12) return 0.0;
    return std::tgamma(p + 1.0) / std::tgamma(q) * std::pow(x, p - alpha.value());
}

double semigroup_residual(const SampledFunction& f, double x) {
    f.validate();
    const std::size_t i = f.index_of(x);
    if (i + 1 < 8) throw std::invalid_argument("semigroup_residual: fewer than 8 grid points before x");
    if (i + 1 >= f.values.size()) throw std::out_of_range("semigroup_residual: x must be interior");
    const FracOrder half(0.5);
    SampledFunction head{f.x0, f.dx, std::vector<double>(f.values.begin(), f.values.begin() + static_cast<std::ptrdiff_t>(i + 1))};
    const SampledFunction once = gl_derivative_all(head, half);
    const double twice = gl_derivative(once, half, x);
    const double central = (f.values[i + 1] - f.values[i - 1]) / (2.0 * f.dx);
    return std::abs(twice - central);
}

SampledFunction read_sampled_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    std::vector<double> xs;
    SampledFunction out;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line != "x,value") throw std::runtime_error("expected header 'x,value' in " + path.string());
            continue;
        }
        std::istringstream row(line);
        std::string xs_text;
        std::string v_text;
        if (!std::getline(row, xs_text, ',') || !std::getline(row, v_text)) {
            throw std::runtime_error("malformed row '" + line + "'");
        }
        xs.push_back(std::stod(xs_text));
        out.values.push_back(std::stod(v_text));
    }
    if (xs.size() < 4) throw std::runtime_error("need at least 4 samples in " + path.string());
    out.x0 = xs.front();
    out.dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(xs[i] - out.x(i)) > 1e-9 * std::max(1.0, std::abs(out.dx) * static_cast<double>(xs.size()))) {
            throw std::runtime_error("x column is not uniformly spaced");
        }
    }
    out.validate();
    return out;
}

}  // namespace fracschrod
