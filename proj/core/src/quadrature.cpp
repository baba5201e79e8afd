#include "fracschrod/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracschrod {

complex trapezoid(std::span<const complex> f, double h) {
    if (f.size() < 2) return {0.0, 0.0};
    complex sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
    return sum * h;
}

double trapezoid(std::span<const double> f, double h) {
    if (f.size() < 2) return 0.0;
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
    return sum * h;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels) {
    if (panels == 0) throw std::invalid_argument("gauss_legendre: panels must be positive");
    const double width = (b - a) / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + static_cast<double>(p) * width;
        const double hi = p + 1 == panels ? b : lo + width;
        total += boost::math::quadrature::gauss<double, 20>::integrate(f, lo, hi);
    }
    return total;
}

double GaussHermiteRule::integrate(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
}

// Newton iteration on orthonormal Hermite functions, with the classic
// asymptotic starting guesses for the largest roots.
GaussHermiteRule gauss_hermite(std::size_t n) {
    if (n == 0 || n > 200) throw std::invalid_argument("gauss_hermite: need 1 <= n <= 200");
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    const double nd = static_cast<double>(n);
    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    double z = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(nd, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[i - 2];
        }
        double pp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                const double jd = static_cast<double>(j);
                p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * nd) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) throw std::runtime_error("gauss_hermite: Newton iteration did not converge");
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
    return rule;
}

double hermite(int n, double y) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * y;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * y * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace fracschrod
