// Test-only reference implementations, kept independent of the library's
// computation paths so they can serve as oracles:
//   * momentum-route walker: builds psi_t(x) by multiplying symbol matrices
//     on a k-grid and inverting the transform (exact for N > 2t nodes),
//     never touching the position-space stepping rule
//   * midpoint integrator on the raw (unsubstituted) density
//   * closed-form CDF of the weighted edge-singular density
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/density.hpp"
#include "qwalk/schedule.hpp"

namespace oracle {

using qwalk::Complex;

/// P(X_t = x) for x = -t..t via the momentum representation.
/// Returns a dense vector indexed by x + t.
inline std::vector<double> momentum_route_probabilities(
    const qwalk::CoinSchedule& schedule, std::int64_t t,
    Complex alpha, Complex beta) {
    const std::int64_t n = 2 * t + 2;  // enough nodes to invert exactly
    std::vector<Eigen::Vector2cd> transformed(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m) {
        double k = 2.0 * std::numbers::pi * static_cast<double>(m) /
                   static_cast<double>(n);
        Eigen::Vector2cd psi(alpha, beta);
        for (std::int64_t s = 0; s < t; ++s) {
            psi = (qwalk::phase_matrix(k) * schedule.coin_at(s).matrix() * psi)
                      .eval();
        }
        transformed[static_cast<std::size_t>(m)] = psi;
    }
    std::vector<double> probabilities(static_cast<std::size_t>(2 * t + 1));
    for (std::int64_t x = -t; x <= t; ++x) {
        Eigen::Vector2cd site = Eigen::Vector2cd::Zero();
        for (std::int64_t m = 0; m < n; ++m) {
            double k = 2.0 * std::numbers::pi * static_cast<double>(m) /
                       static_cast<double>(n);
            Complex phase(std::cos(k * static_cast<double>(x)),
                          std::sin(k * static_cast<double>(x)));
            site += phase * transformed[static_cast<std::size_t>(m)];
        }
        site /= static_cast<double>(n);
        probabilities[static_cast<std::size_t>(x + t)] =
            std::norm(site[0]) + std::norm(site[1]);
    }
    return probabilities;
}

/// Midpoint rule on the raw integrand x^r f(x) over (-scale, scale);
/// the edge divergence is integrable, so 1e6 cells give ~1e-4 accuracy.
inline double midpoint_density_moment(const qwalk::LimitDensity& d, int r,
                                      std::int64_t cells = 1000000) {
    double a = d.scale();
    double h = 2.0 * a / static_cast<double>(cells);
    double sum = 0.0;
    for (std::int64_t i = 0; i < cells; ++i) {
        double x = -a + h * (static_cast<double>(i) + 0.5);
        sum += std::pow(x, r) * d(x);
    }
    return sum * h;
}

/// Exact antiderivative of f_K(s; a) (1 - w s) on (-a, a):
///   F(x) = (1/pi) [ atan(b x / sqrt(a^2 - x^2)) + pi/2
///                   + w atan(a sqrt(a^2 - x^2) / (a b)) ]  ... with b = sqrt(1-a^2),
/// written below with the equivalent cos(asin) form.
inline double closed_form_cdf(double scale, double weight, double x) {
    if (x <= -scale) return 0.0;
    if (x >= scale) return 1.0;
    double b = std::sqrt(1.0 - scale * scale);
    double rho = x / scale;
    double root = std::sqrt(1.0 - rho * rho);
    return (std::atan(b * rho / root) + std::numbers::pi / 2.0 +
            weight * std::atan(scale * root / b)) /
           std::numbers::pi;
}

/// Quantile by bisection on the closed-form CDF.
inline double closed_form_quantile(double scale, double weight, double p) {
    double lo = -scale, hi = scale;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (closed_form_cdf(scale, weight, mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
