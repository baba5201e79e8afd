#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "fracschrod/grid.hpp"
#include "fracschrod/params.hpp"

namespace fracschrod {

using BigInt = boost::multiprecision::cpp_int;

/// C_{n+2} / C_n = (2n + 1 + g^2/4 - 2 eps) / ((n+1)(n+2)).
double series_ratio(int n, double eps, double g);

/// eps_n = n + 1/2 + g^2 / 8.
double oscillator_level(int n, double g);

struct OscLevel {
    int n = 0;
    double eps = 0.0;
    double energy = 0.0;  ///< hbar omega eps
};

struct OscillatorSpectrum {
    std::vector<OscLevel> levels;
    Convention convention = Convention::Reduced;
};

/// Levels 0..n_max.
OscillatorSpectrum quantize_oscillator(const PhysicalParams& params, Convention convention,
                                       int n_max);

/// The normalisation polynomial P_n(mu) = sum_k G_{n,2k} mu^{2k}, with
/// integer coefficients built from P_{n-1}:
///   G_{n,0} = n!,  G_{n,2n} = 2^n,  G_{n,2k} = n^2 G_{n-1,2k} / (n-k).
struct PnPolynomial {
    int n = 0;
    std::vector<BigInt> coeffs;  ///< coeffs[k] = G_{n,2k}

    [[nodiscard]] double operator()(double mu) const;
    [[nodiscard]] BigInt exact(const BigInt& mu) const;
};

PnPolynomial pn_polynomial(int n);

/// (1 / (2^n sqrt(pi))) * integral of H_n(t - mu)^2 exp(-t^2) dt by
/// (n + 5)-point Gauss-Hermite quadrature. Requires 0 <= n <= 30.
double pn_oracle(int n, double mu);

/// A_n = (m omega / (hbar pi 2^{2n}))^{1/4} / sqrt(P_n(mu)).
double osc_normalization(const PhysicalParams& params, int n, double mu);

/// psi_n(x) = A_n H_n(b x) exp(-(b x + mu)^2 / 2).
struct OscEigenfunction {
    int n = 0;
    double mu = 0.0;
    double amplitude = 0.0;
    double b = 1.0;

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] double derivative(double x) const;
    /// Integral of |psi|^2 dx, evaluated exactly with Gauss-Hermite quadrature.
    [[nodiscard]] double norm_squared() const;
};

OscEigenfunction osc_eigenfunction(const PhysicalParams& params, double mu, int n);
OscEigenfunction osc_eigenfunction(const PhysicalParams& params, Convention convention, int n);
WaveSample osc_eigenfunction(const PhysicalParams& params, Convention convention, int n,
                             const GridSpec& grid);

/// Largest |psi'' + g psi' + (2 eps_n - y^2) psi| over interior nodes of a
/// y-grid, fourth-order central differences, for the unit-norm psi_n(y)
/// with mu = g / 2.
double oscillator_residual(int n, double g, const GridSpec& y_grid);

/// Physical grid centred on the displaced Gaussian, half-width `half_width`
/// in units of 1/b.
GridSpec oscillator_grid(const DerivedScales& scales, std::size_t n_points, double half_width = 12.0);

}  // namespace fracschrod
