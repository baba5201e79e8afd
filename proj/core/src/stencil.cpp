#include "fracschrod/stencil.hpp"

#include <stdexcept>

namespace fracschrod {

std::vector<complex> derivative(std::span<const complex> f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("derivative: need at least 5 samples");
    std::vector<complex> d(n);
    const double s = 1.0 / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * s;
    }
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * s;
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * s;
    return d;
}

std::vector<complex> second_derivative(std::span<const complex> f, double h) {
    const std::size_t n = f.size();
    if (n < 6) throw std::invalid_argument("second_derivative: need at least 6 samples");
    std::vector<complex> d(n);
    const double s = 1.0 / (12.0 * h * h);
    d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) * s;
    d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * s;
    }
    d[n - 2] = (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]) * s;
    d[n - 1] = (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] - 10.0 * f[n - 6]) * s;
    return d;
}

WaveSample derivative(const WaveSample& f) {
    return {f.x0, f.dx, derivative(std::span<const complex>(f.values), f.dx)};
}

WaveSample second_derivative(const WaveSample& f) {
    return {f.x0, f.dx, second_derivative(std::span<const complex>(f.values), f.dx)};
}

}  // namespace fracschrod
