#include "qwalk/density.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"
#include "qwalk/numerics.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

double konno_density(double x, double a_mod) {
    if (!(a_mod > 0.0 && a_mod < 1.0)) {
        throw DomainError("konno_density: scale must lie in (0,1), got " +
                          std::to_string(a_mod));
    }
    if (std::abs(x) >= a_mod) return 0.0;
    double b = std::sqrt(1.0 - a_mod * a_mod);
    return b / (std::numbers::pi * (1.0 - x * x) *
                std::sqrt(a_mod * a_mod - x * x));
}

LimitDensity::LimitDensity(double scale, double weight, std::string provenance)
    : scale_(scale), weight_(weight), provenance_(std::move(provenance)) {
    if (!(scale_ > 0.0 && scale_ < 1.0)) {
        throw DomainError("LimitDensity: scale must lie in (0,1), got " +
                          std::to_string(scale_));
    }
    if (!std::isfinite(weight_)) {
        throw DomainError("LimitDensity: weight must be finite");
    }
    // min over the support of (1 - w x) is 1 - |w| * scale.
    if (1.0 - std::abs(weight_) * scale_ < -1e-12) {
        throw DomainError("LimitDensity: weight " + std::to_string(weight_) +
                          " makes the density negative on (-scale, scale)");
    }
}

double LimitDensity::operator()(double x) const {
    if (std::abs(x) >= scale_) return 0.0;
    return konno_density(x, scale_) * (1.0 - weight_ * x);
}

namespace {

void require_normalized(Complex alpha, Complex beta, const char* context) {
    double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > tol::state_norm) {
        throw NormalizationError(std::string(context) +
                                 ": |alpha|^2 + |beta|^2 = " + std::to_string(norm) +
                                 ", expected 1");
    }
}

double weight_from_bracket(Complex alpha, Complex beta, double b0_over_a0) {
    double cross = 2.0 * (alpha * std::conj(beta)).real();
    return std::norm(alpha) - std::norm(beta) + cross * b0_over_a0;
}

void require_real_orthogonal(const CoinMatrix& h, const char* context) {
    double max_imag = h.matrix().imag().cwiseAbs().maxCoeff();
    if (max_imag > tol::zero_entry) {
        throw DomainError(std::string(context) + ": coin entries must be real");
    }
    require_unitary(h, context);
    require_nonzero_entries(h, context);
}

}  // namespace

LimitDensity theorem1_density(double theta0, double theta1,
                              Complex alpha, Complex beta) {
    // Reflection-form pair: both determinants are -1, so det(H1 H0) = +1 and
    // the min rule applies.
    require_walk_angle(theta0, "theorem1_density(theta0)");
    require_walk_angle(theta1, "theorem1_density(theta1)");
    if (std::abs(std::remainder(theta0 - theta1, 2.0 * std::numbers::pi)) <
        tol::degenerate_angle) {
        throw EqualAngleError("theorem1_density: theta0 and theta1 must differ");
    }
    require_normalized(alpha, beta, "theorem1_density");

    double a0 = std::cos(theta0);
    double a1 = std::cos(theta1);
    double scale = std::min(std::abs(a0), std::abs(a1));
    double weight = weight_from_bracket(alpha, beta, std::tan(theta0));
    return LimitDensity(scale, weight, "theorem1(i)");
}

LimitDensity theorem1_density(const CoinMatrix& h0, const CoinMatrix& h1,
                              Complex alpha, Complex beta) {
    require_real_orthogonal(h0, "theorem1_density");
    require_real_orthogonal(h1, "theorem1_density");
    if (h0.entrywise_distance(h1) < tol::degenerate_angle) {
        throw EqualAngleError("theorem1_density: the two coins must differ");
    }
    require_normalized(alpha, beta, "theorem1_density");

    double det = (h1.matrix() * h0.matrix()).determinant().real();
    if (std::abs(std::abs(det) - 1.0) > tol::orthogonal_det) {
        throw InternalError("theorem1_density: |det(H1 H0)| deviates from 1 by " +
                            std::to_string(std::abs(std::abs(det) - 1.0)));
    }

    double a0 = h0.a().real();
    double a1 = h1.a().real();
    double scale = det > 0.0 ? std::min(std::abs(a0), std::abs(a1))
                             : std::abs(a0 * a1);
    double weight = weight_from_bracket(alpha, beta, h0.b().real() / a0);
    return LimitDensity(scale, weight, det > 0.0 ? "theorem1(i)" : "theorem1(ii)");
}

namespace {

LimitDensity phase_family_density(Complex a, Complex b, Complex alpha,
                                  Complex beta, double w0, double phase_sign,
                                  const char* provenance) {
    double a_mod = std::abs(a);
    if (!(a_mod > 0.0 && a_mod < 1.0)) {
        throw DomainError(std::string(provenance) +
                          ": |a| must lie in (0,1), got " + std::to_string(a_mod));
    }
    require_normalized(alpha, beta, provenance);

    Complex unit(std::cos(w0), phase_sign * std::sin(w0));
    Complex cross = a * alpha * std::conj(b * beta) * unit +
                    std::conj(a * alpha) * b * beta * std::conj(unit);
    if (std::abs(cross.imag()) > 1e-12) {
        throw InternalError(std::string(provenance) +
                            ": weight cross term is not real");
    }
    double weight = std::norm(alpha) - std::norm(beta) +
                    cross.real() / (a_mod * a_mod);
    return LimitDensity(a_mod, weight, provenance);
}

}  // namespace

LimitDensity theorem2_density(Complex a, Complex b,
                              Complex alpha, Complex beta, double w0) {
    return phase_family_density(a, b, alpha, beta, w0, +1.0, "theorem2");
}

LimitDensity theorem3_density(Complex a, Complex b,
                              Complex alpha, Complex beta, double w0) {
    return phase_family_density(a, b, alpha, beta, w0, -1.0, "theorem3");
}

namespace {

// All density quadratures run on the substituted variable x = scale*sin(u),
// which removes the inverse-square-root edge divergence exactly:
//   f(x) dx = sqrt(1-a^2)/pi * (1 - w a sin u) / (1 - a^2 sin^2 u) du.
double transformed_integrand(double u, double a, double w) {
    double s = std::sin(u);
    double core = std::sqrt(1.0 - a * a) /
                  (std::numbers::pi * (1.0 - a * a * s * s));
    return core * (1.0 - w * a * s);
}

constexpr double half_pi = std::numbers::pi / 2.0;

}  // namespace

double density_cdf(const LimitDensity& d, double x) {
    double a = d.scale();
    if (x <= -a) return 0.0;
    if (x >= a) return 1.0;
    double v = std::asin(x / a);
    double w = d.weight_constant();
    double value = adaptive_simpson(
        [a, w](double u) { return transformed_integrand(u, a, w); },
        -half_pi, v, tol::density_quadrature);
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

double density_moment(const LimitDensity& d, int r) {
    if (r < 0 || r > 16) {
        throw DomainError("density_moment: order must be in 0..16, got " +
                          std::to_string(r));
    }
    double a = d.scale();
    double w = d.weight_constant();
    return adaptive_simpson(
        [a, w, r](double u) {
            return integer_power(a * std::sin(u), r) * transformed_integrand(u, a, w);
        },
        -half_pi, half_pi, tol::density_quadrature);
}

}  // namespace qwalk
