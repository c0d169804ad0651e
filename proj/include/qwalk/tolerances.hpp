#pragma once

namespace qwalk::tol {

// Single ledger of numerical tolerances, reused everywhere.

/// Max absolute deviation of U*adjoint(U) from the identity.
inline constexpr double unitarity = 1e-12;

/// |alpha|^2 + |beta|^2 must equal 1 within this bound.
inline constexpr double state_norm = 1e-10;

/// Orthogonal-coin angles must stay this far from multiples of pi/2.
inline constexpr double degenerate_angle = 1e-12;

/// Coin entries with magnitude below this count as zero.
inline constexpr double zero_entry = 1e-12;

/// Eigenvalue gap below which symbol eigenvectors are ill-conditioned.
inline constexpr double eigen_gap = 1e-10;

/// Width of the k-interval excluded around a degenerate symbol point.
inline constexpr double degenerate_window = 1e-4;

/// Allowed deviation of |det| from 1 for orthogonal matrices.
inline constexpr double orthogonal_det = 1e-10;

/// Absolute target for density quadratures (normalization, moments, CDF).
inline constexpr double density_quadrature = 1e-10;

/// Agreement required between successive k-grid refinements.
inline constexpr double k_grid_refinement = 1e-7;

}  // namespace qwalk::tol
