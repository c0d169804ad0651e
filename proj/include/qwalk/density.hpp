#pragma once

#include <string>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Konno density f_K(x; a) = sqrt(1-a^2) / (pi (1-x^2) sqrt(a^2-x^2)) on the
/// open interval (-a, a), zero outside. The value at x = +-a exactly is 0 by
/// convention (measure-zero endpoints where the formula diverges).
/// Throws DomainError unless 0 < a_mod < 1.
double konno_density(double x, double a_mod);

/// Closed-form limit density f(x) = f_K(x; scale) * (1 - weight * x) of the
/// rescaled position X_t / t.
class LimitDensity {
public:
    /// Throws DomainError when scale is outside (0,1) or when 1 - weight*x
    /// dips below -1e-12 somewhere on the support (f must stay nonnegative).
    LimitDensity(double scale, double weight, std::string provenance);

    double scale() const { return scale_; }
    double weight_constant() const { return weight_; }
    const std::string& provenance() const { return provenance_; }

    double operator()(double x) const;

private:
    double scale_;
    double weight_;
    std::string provenance_;
};

/// Two-period limit density for reflection-form coins at angles theta0,
/// theta1: scale = min(|cos theta0|, |cos theta1|), weight picks up the
/// initial-state asymmetry through b0/a0 = tan(theta0).
/// Throws DegenerateCoinError / EqualAngleError / NormalizationError.
LimitDensity theorem1_density(double theta0, double theta1,
                              Complex alpha, Complex beta);

/// General-orthogonal-pair entry point. The determinant sign of H1*H0 picks
/// the branch: positive gives scale = min(|a0|, |a1|), negative gives
/// scale = |a0 * a1|. Matrices must be real orthogonal with nonzero entries.
LimitDensity theorem1_density(const CoinMatrix& h0, const CoinMatrix& h1,
                              Complex alpha, Complex beta);

/// Limit density of the alternating-phase (Case 1) family with base-coin
/// entries a, b, phase seed w0: scale = |a|, weight carries e^{+i w0}.
LimitDensity theorem2_density(Complex a, Complex b,
                              Complex alpha, Complex beta, double w0);

/// Same for the linear-phase (Case 2) family; the w0 phase enters with the
/// opposite sign.
LimitDensity theorem3_density(Complex a, Complex b,
                              Complex alpha, Complex beta, double w0);

/// F(x) = integral of the density from -scale to x; 0 below the support,
/// 1 above, accurate to ~1e-8 inside.
double density_cdf(const LimitDensity& d, double x);

/// r-th moment of the density by quadrature, absolute error <= 1e-8.
/// Throws DomainError for r < 0 or r > 16.
double density_moment(const LimitDensity& d, int r);

}  // namespace qwalk
