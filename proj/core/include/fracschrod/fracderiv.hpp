#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <vector>

namespace fracschrod {

/// Real samples f(x0 + i dx), i = 0..N. The lower terminal of every
/// fractional derivative taken on it is x0.
struct SampledFunction {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<double> values;

    /// Throws std::invalid_argument unless dx > 0 and there are at least 4 samples.
    void validate() const;
    [[nodiscard]] double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    /// Index of the grid node at x; throws when x is not a node.
    [[nodiscard]] std::size_t index_of(double x) const;

    static SampledFunction sample(const std::function<double(double)>& f, double x0, double dx,
                                  std::size_t count);
};

/// Derivative order in (0, 1].
class FracOrder {
public:
    explicit FracOrder(double alpha);
    [[nodiscard]] double value() const { return alpha_; }

private:
    double alpha_;
};

/// Binomial weights w_k = w_{k-1} (k - 1 - alpha) / k, w_0 = 1.
std::vector<double> gl_weights(FracOrder alpha, std::size_t count);

/// Grunwald-Letnikov derivative of order alpha at grid node x > x0.
double gl_derivative(const SampledFunction& f, FracOrder alpha, double x);

/// Grunwald-Letnikov derivative at every node; the result shares the grid of `f`.
SampledFunction gl_derivative_all(const SampledFunction& f, FracOrder alpha);

/// Gamma(p+1) / Gamma(p+1-alpha) x^(p-alpha); zero at poles of the denominator.
double power_rule_oracle(double p, FracOrder alpha, double x);

/// |D^(1/2) D^(1/2) f (x) - f'(x)| with f' a central difference. x must be
/// an interior node with at least 8 nodes at or before it.
double semigroup_residual(const SampledFunction& f, double x);

/// Two-column CSV (header x,value) with uniformly spaced x.
SampledFunction read_sampled_csv(const std::filesystem::path& path);

}  // namespace fracschrod
