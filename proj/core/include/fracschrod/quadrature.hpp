#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fracschrod/grid.hpp"

namespace fracschrod {

/// Composite trapezoid rule over equally spaced samples.
complex trapezoid(std::span<const complex> f, double h);
double trapezoid(std::span<const double> f, double h);

/// Composite 20-point Gauss-Legendre over `panels` equal panels of [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels = 64);

/// Nodes and weights for the weight function exp(-t^2).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] double integrate(const std::function<double(double)>& f) const;
};

/// n-point rule, exact for polynomials of degree <= 2n - 1. Valid for 1 <= n <= 200.
GaussHermiteRule gauss_hermite(std::size_t n);

/// Physicists' Hermite polynomial via H_{n+1} = 2y H_n - 2n H_{n-1}.
double hermite(int n, double y);

}  // namespace fracschrod
