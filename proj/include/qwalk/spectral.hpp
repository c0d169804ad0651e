#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// One-step operator in momentum space at wavenumber k: R(k) * coin.
struct SymbolMatrix {
    double k = 0.0;
    Eigen::Matrix2cd matrix;
};

/// Eigendecomposition of the two-period symbol H1(k)H0(k) together with the
/// initial-state overlaps |<v_j | psi0>|^2. Branch j = 0 is the eigenvalue
/// with nonnegative imaginary part.
struct EigenSystem {
    Complex lambda0;
    Complex lambda1;
    Eigen::Vector2cd v0;
    Eigen::Vector2cd v1;
    double overlap0 = 0.0;
    double overlap1 = 0.0;
};

/// R(k) * coin. Throws UnitarityError for a non-unitary coin.
SymbolMatrix symbol(double k, const CoinMatrix& coin);

/// Eigenvalue of the two-period symbol from its closed form
///   lambda_j(k) = A + (-1)^j i sqrt(1 - A^2),
///   A(k) = cos(theta0) cos(theta1) cos(2k) + sin(theta0) sin(theta1).
Complex two_period_eigenvalue(double theta0, double theta1, double k, int j);

/// Numeric eigendecomposition of the explicit product R(k)H1 R(k)H0 for
/// reflection-form coins, cross-checked against the closed form (InternalError
/// on disagreement beyond 1e-10). Throws DegenerateSymbolError when the
/// eigenvalue gap is below tol::eigen_gap.
EigenSystem two_period_eigensystem(double theta0, double theta1, double k,
                                   const Spinor& psi0);

/// Group velocity h_j(k) = -(1/2) d/dk arg(lambda_j), evaluated analytically:
///   h_j(k) = (-1)^{j+1} cos(theta0) cos(theta1) sin(2k) / sqrt(1 - A^2).
/// Real, bounded by min(|cos theta0|, |cos theta1|).
double group_velocity(double theta0, double theta1, double k, int j);

/// Asymptotic moment of the rescaled walk from the Fourier side:
///   integral dk/2pi sum_j h_j(k)^r |<v_j(k)|psi0>|^2
/// over a full period, on a uniform k-grid with refinement until two
/// successive doublings agree. Degenerate k-points are skipped; the integrand
/// is bounded so the omitted measure contributes below the target accuracy.
double limit_moment_integral(double theta0, double theta1,
                             Complex alpha, Complex beta, int r);

/// All moments 0..r_max from a single grid sweep (same contract as
/// limit_moment_integral; result[r] is the r-th moment).
std::vector<double> limit_moments(double theta0, double theta1,
                                  Complex alpha, Complex beta, int r_max);

}  // namespace qwalk
