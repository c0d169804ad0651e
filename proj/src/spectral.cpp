#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/numerics.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

SymbolMatrix symbol(double k, const CoinMatrix& coin) {
    require_unitary(coin, "symbol");
    return SymbolMatrix{k, phase_matrix(k) * coin.matrix()};
}

namespace {

void require_two_period_angles(double theta0, double theta1, const char* context) {
    require_walk_angle(theta0, context);
    require_walk_angle(theta1, context);
    if (std::abs(std::remainder(theta0 - theta1, 2.0 * std::numbers::pi)) <
        tol::degenerate_angle) {
        throw EqualAngleError(std::string(context) +
                              ": theta0 and theta1 must differ");
    }
}

// Real part shared by both eigenvalues of the two-period symbol.
double symbol_real_part(double theta0, double theta1, double k) {
    return std::cos(theta0) * std::cos(theta1) * std::cos(2.0 * k) +
           std::sin(theta0) * std::sin(theta1);
}

Eigen::Matrix2cd two_period_product(double theta0, double theta1, double k) {
    Eigen::Matrix2cd h0 = phase_matrix(k) * orthogonal_coin(theta0).matrix();
    Eigen::Matrix2cd h1 = phase_matrix(k) * orthogonal_coin(theta1).matrix();
    return h1 * h0;
}

}  // namespace

Complex two_period_eigenvalue(double theta0, double theta1, double k, int j) {
    if (j != 0 && j != 1) {
        throw DomainError("two_period_eigenvalue: branch index must be 0 or 1");
    }
    double a = symbol_real_part(theta0, theta1, k);
    double imag_sq = 1.0 - a * a;
    double imag = imag_sq > 0.0 ? std::sqrt(imag_sq) : 0.0;
    return Complex(a, j == 0 ? imag : -imag);
}

EigenSystem two_period_eigensystem(double theta0, double theta1, double k,
                                   const Spinor& psi0) {
    require_two_period_angles(theta0, theta1, "two_period_eigensystem");
    double norm = std::norm(psi0[0]) + std::norm(psi0[1]);
    if (std::abs(norm - 1.0) > tol::state_norm) {
        throw NormalizationError("two_period_eigensystem: initial spinor must "
                                 "be normalized");
    }

    Eigen::Matrix2cd product = two_period_product(theta0, theta1, k);
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(product, true);
    if (solver.info() != Eigen::Success) {
        throw InternalError("two_period_eigensystem: eigensolver failed");
    }

    // Branch 0 carries the nonnegative imaginary part.
    int i0 = solver.eigenvalues()(0).imag() >= solver.eigenvalues()(1).imag() ? 0 : 1;
    int i1 = 1 - i0;

    EigenSystem sys;
    sys.lambda0 = solver.eigenvalues()(i0);
    sys.lambda1 = solver.eigenvalues()(i1);
    if (std::abs(sys.lambda0 - sys.lambda1) < tol::eigen_gap) {
        throw DegenerateSymbolError(
            "two_period_eigensystem: eigenvalue gap below " +
            std::to_string(tol::eigen_gap) + " at k = " + std::to_string(k));
    }
    sys.v0 = solver.eigenvectors().col(i0).normalized();
    sys.v1 = solver.eigenvectors().col(i1).normalized();

    for (int j = 0; j < 2; ++j) {
        Complex closed = two_period_eigenvalue(theta0, theta1, k, j);
        Complex numeric = j == 0 ? sys.lambda0 : sys.lambda1;
        if (std::abs(closed - numeric) > 1e-10) {
            throw InternalError("two_period_eigensystem: numeric eigenvalue "
                                "disagrees with the closed form");
        }
    }

    sys.overlap0 = std::norm(sys.v0.dot(psi0));
    sys.overlap1 = std::norm(sys.v1.dot(psi0));
    return sys;
}

double group_velocity(double theta0, double theta1, double k, int j) {
    require_two_period_angles(theta0, theta1, "group_velocity");
    if (j != 0 && j != 1) {
        throw DomainError("group_velocity: branch index must be 0 or 1");
    }
    double a = symbol_real_part(theta0, theta1, k);
    double imag_sq = 1.0 - a * a;
    if (imag_sq < 1e-12) {
        throw DegenerateSymbolError("group_velocity: eigenphase stationary "
                                    "point at k = " + std::to_string(k));
    }
    double sign = j == 0 ? -1.0 : 1.0;
    return sign * std::cos(theta0) * std::cos(theta1) * std::sin(2.0 * k) /
           std::sqrt(imag_sq);
}

namespace {

// Midpoint sum of the moment integrand over n uniform k-nodes. Nodes inside
// the degenerate window are skipped; |h| <= 1 and overlaps <= 1 bound the
// omitted contribution by (skipped measure)/2pi.
std::vector<double> moment_grid_sum(double theta0, double theta1,
                                    const Spinor& psi0, int r_max, int n) {
    std::vector<KahanSum> sums(static_cast<std::size_t>(r_max) + 1);
    double h_step = 2.0 * std::numbers::pi / n;
    for (int m = 0; m < n; ++m) {
        double k = h_step * (m + 0.5);
        double a = symbol_real_part(theta0, theta1, k);
        if (1.0 - a * a < 1e-12) continue;
        EigenSystem sys;
        try {
            sys = two_period_eigensystem(theta0, theta1, k, psi0);
        } catch (const DegenerateSymbolError&) {
            continue;
        }
        double h0 = group_velocity(theta0, theta1, k, 0);
        double h1 = -h0;
        double p0 = 1.0, p1 = 1.0;
        for (int r = 0; r <= r_max; ++r) {
            sums[static_cast<std::size_t>(r)].add(p0 * sys.overlap0 +
                                                  p1 * sys.overlap1);
            p0 *= h0;
            p1 *= h1;
        }
    }
    std::vector<double> result(static_cast<std::size_t>(r_max) + 1);
    for (std::size_t r = 0; r < result.size(); ++r) {
        result[r] = sums[r].value() / n;
    }
    return result;
}

}  // namespace

std::vector<double> limit_moments(double theta0, double theta1,
                                  Complex alpha, Complex beta, int r_max) {
    if (r_max < 0 || r_max > 16) {
        throw DomainError("limit_moments: order must be in 0..16");
    }
    require_two_period_angles(theta0, theta1, "limit_moments");
    Spinor psi0(alpha, beta);
    double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > tol::state_norm) {
        throw NormalizationError("limit_moments: initial spinor must be normalized");
    }

    // Uniform grids converge spectrally on this periodic integrand; double
    // until two refinements agree.
    int n = 4096;
    std::vector<double> coarse = moment_grid_sum(theta0, theta1, psi0, r_max, n);
    while (n < (1 << 17)) {
        std::vector<double> fine =
            moment_grid_sum(theta0, theta1, psi0, r_max, 2 * n);
        double delta = 0.0;
        for (std::size_t r = 0; r < fine.size(); ++r) {
            delta = std::max(delta, std::abs(fine[r] - coarse[r]));
        }
        coarse = std::move(fine);
        n *= 2;
        if (delta < tol::k_grid_refinement) break;
    }
    return coarse;
}

double limit_moment_integral(double theta0, double theta1,
                             Complex alpha, Complex beta, int r) {
    if (r < 0 || r > 16) {
        throw DomainError("limit_moment_integral: order must be in 0..16");
    }
    return limit_moments(theta0, theta1, alpha, beta, r)
        [static_cast<std::size_t>(r)];
}

}  // namespace qwalk
