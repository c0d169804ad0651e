#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

double CoinMatrix::unitarity_defect() const {
    Eigen::Matrix2cd residual = m_ * m_.adjoint() - Eigen::Matrix2cd::Identity();
    return residual.cwiseAbs().maxCoeff();
}

double CoinMatrix::min_entry_magnitude() const {
    return m_.cwiseAbs().minCoeff();
}

double CoinMatrix::entrywise_distance(const CoinMatrix& other) const {
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

void require_walk_angle(double theta, const char* context) {
    // Entries vanish when theta is a multiple of pi/2.
    double nearest = std::remainder(theta, std::numbers::pi / 2.0);
    if (std::abs(nearest) < tol::degenerate_angle) {
        throw DegenerateCoinError(std::string(context) +
                                  ": angle must differ from every multiple of pi/2 "
                                  "(got " + std::to_string(theta) + ")");
    }
}

CoinMatrix orthogonal_coin(double theta) {
    require_walk_angle(theta, "orthogonal_coin");
    double c = std::cos(theta);
    double s = std::sin(theta);
    return CoinMatrix(c, s, s, -c);
}

CoinMatrix rotation_coin(double theta) {
    require_walk_angle(theta, "rotation_coin");
    double c = std::cos(theta);
    double s = std::sin(theta);
    return CoinMatrix(c, -s, s, c);
}

Eigen::Matrix2cd phase_matrix(double k) {
    Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
    r(0, 0) = Complex(std::cos(k), std::sin(k));
    r(1, 1) = Complex(std::cos(k), -std::sin(k));
    return r;
}

void require_unitary(const CoinMatrix& coin, const char* context) {
    double defect = coin.unitarity_defect();
    if (!(defect <= tol::unitarity)) {
        throw UnitarityError(std::string(context) + ": coin is not unitary (defect " +
                             std::to_string(defect) + ")");
    }
}

void require_nonzero_entries(const CoinMatrix& coin, const char* context) {
    if (coin.min_entry_magnitude() < tol::zero_entry) {
        throw ZeroEntryError(std::string(context) +
                             ": all four coin entries must be nonzero");
    }
}

}  // namespace qwalk
