#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;

/// 2x2 complex coin matrix [[a, b], [c, d]].
///
/// The top row routes amplitude to the left neighbor, the bottom row to the
/// right one. Construction does not enforce unitarity; operations that need
/// it check unitarity_defect() against tol::unitarity at the call site.
class CoinMatrix {
public:
    CoinMatrix() : m_(Eigen::Matrix2cd::Identity()) {}
    CoinMatrix(Complex a, Complex b, Complex c, Complex d) {
        m_ << a, b, c, d;
    }
    explicit CoinMatrix(const Eigen::Matrix2cd& m) : m_(m) {}

    Complex a() const { return m_(0, 0); }
    Complex b() const { return m_(0, 1); }
    Complex c() const { return m_(1, 0); }
    Complex d() const { return m_(1, 1); }

    const Eigen::Matrix2cd& matrix() const { return m_; }

    /// Max absolute entry of U*adjoint(U) - I.
    double unitarity_defect() const;

    /// Smallest entry magnitude; schedules require this to be nonzero.
    double min_entry_magnitude() const;

    /// Max absolute entrywise difference to another coin.
    double entrywise_distance(const CoinMatrix& other) const;

private:
    Eigen::Matrix2cd m_;
};

/// Reflection-form orthogonal coin [[cos t, sin t], [sin t, -cos t]], det -1.
/// Throws DegenerateCoinError when theta is within tol::degenerate_angle of a
/// multiple of pi/2 (a zero entry would break the walk theorems).
CoinMatrix orthogonal_coin(double theta);

/// Rotation coin [[cos t, -sin t], [sin t, cos t]], det +1. Same angle
/// restriction as orthogonal_coin.
CoinMatrix rotation_coin(double theta);

/// Diagonal phase matrix R(k) = diag(e^{ik}, e^{-ik}).
/// Satisfies R(k1)R(k2) = R(k1+k2) and adjoint(R(k)) = R(-k).
Eigen::Matrix2cd phase_matrix(double k);

/// Throws DegenerateCoinError when theta is within tol::degenerate_angle of
/// a multiple of pi/2 (some coin entry would vanish there).
void require_walk_angle(double theta, const char* context);

/// Throws UnitarityError unless the coin is unitary within tol::unitarity.
void require_unitary(const CoinMatrix& coin, const char* context);

/// Throws ZeroEntryError unless all four entries are nonzero.
void require_nonzero_entries(const CoinMatrix& coin, const char* context);

}  // namespace qwalk
