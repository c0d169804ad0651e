#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

/// Two-component amplitude at a lattice site; [0] is the "up" (left-moving)
/// component, [1] the "down" (right-moving) one.
using Spinor = Eigen::Vector2cd;

/// Full amplitude field of a walk at a fixed time t.
///
/// Stores a dense array of 2t+1 spinors over positions -t..t, with explicit
/// zeros on wrong-parity sites (only x with x == t mod 2 carry amplitude).
/// States are immutable values: step/evolve return new states.
class WalkState {
public:
    /// Leftmost represented position is -time().
    std::int64_t time() const { return time_; }
    std::int64_t offset() const { return -time_; }

    const std::vector<Spinor>& amplitudes() const { return amps_; }

    /// Amplitude at lattice position x; zero spinor outside the cone |x| <= t.
    Spinor at(std::int64_t x) const;

    /// Assemble a state from a raw field over -time..time (2*time+1 spinors).
    /// Does not normalize; used to form superpositions and test fixtures.
    static WalkState from_amplitudes(std::int64_t time, std::vector<Spinor> amps);

private:
    WalkState(std::int64_t time, std::vector<Spinor> amps)
        : time_(time), amps_(std::move(amps)) {}

    std::int64_t time_;
    std::vector<Spinor> amps_;

    friend WalkState new_walk(Complex alpha, Complex beta);
    friend WalkState step(const WalkState& state, const CoinMatrix& coin);
};

/// Position probabilities P(X_t = x) at a fixed time, one entry per
/// parity-consistent site, positions ascending.
struct Distribution {
    std::int64_t time = 0;
    std::vector<std::pair<std::int64_t, double>> entries;
};

/// State at time 0 localized at the origin with spinor (alpha, beta).
/// Throws NormalizationError unless |alpha|^2 + |beta|^2 = 1 within
/// tol::state_norm.
WalkState new_walk(Complex alpha, Complex beta);

/// One step of the evolution: psi'(x) = P psi(x+1) + Q psi(x-1), where P/Q
/// are the top/bottom row split of the coin. Throws UnitarityError if the
/// coin is not unitary within tol::unitarity.
WalkState step(const WalkState& state, const CoinMatrix& coin);

/// Apply step with schedule.coin_at(t) for t = state.time .. state.time+steps-1.
WalkState evolve(const WalkState& state, const CoinSchedule& schedule,
                 std::int64_t steps);

/// P(x) = |psi(x)|^2 for every parity-consistent site in -t..t.
Distribution distribution(const WalkState& state);

/// Sum of all probabilities (compensated summation).
double total_probability(const WalkState& state);

/// r-th moment sum_x x^r P(x); divided by t^r when rescale is set.
/// Throws DomainError for r > 16 or when rescaling a time-0 distribution.
double empirical_moment(const Distribution& dist, int r, bool rescale);

/// Standard deviation sqrt(m2 - m1^2) of a distribution.
double standard_deviation(const Distribution& dist);

}  // namespace qwalk
