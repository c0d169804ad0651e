#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

enum class ScheduleKind {
    OnePeriod,
    NPeriod,
    TwoPeriodOrthogonal,
    Case1,
    Case2,
};

/// Rule mapping a time index t to the coin applied at step t.
///
/// Periodic kinds store their coin list and index it, so coin_at(t + n) is
/// bit-identical to coin_at(t). The Case1/Case2 kinds store a base unitary
/// plus (w0, kappa) and evaluate the phase w_t from its closed form rather
/// than by iterating the recurrence, so no rounding accumulates over t.
class CoinSchedule {
public:
    /// Constant coin: coin_at(t) = coin for all t.
    static CoinSchedule one_period(const CoinMatrix& coin);

    /// Periodic list, any n >= 1: coin_at(t) = coins[t % n].
    static CoinSchedule n_period(std::vector<CoinMatrix> coins);

    /// Alternating pair: coin_at(even) = h0, coin_at(odd) = h1.
    static CoinSchedule two_period(const CoinMatrix& h0, const CoinMatrix& h1);

    /// Phase family with alternating recurrence w_{t+1} + w_t = kappa1:
    ///   coin_at(t) = [[a e^{i w_t}, b], [c, d e^{-i w_t}]],
    ///   w_t = (-1)^t (w0 - kappa1/2) + kappa1/2.
    static CoinSchedule case1(const CoinMatrix& base, double w0, double kappa1);

    /// Phase family with linear recurrence w_{t+1} = w_t + kappa2:
    ///   coin_at(t) = [[a, b e^{i w_t}], [c e^{-i w_t}, d]],  w_t = kappa2 t + w0.
    static CoinSchedule case2(const CoinMatrix& base, double w0, double kappa2);

    ScheduleKind kind() const { return kind_; }

    CoinMatrix coin_at(std::int64_t t) const;

    /// Phase w_t from the closed form. KindError unless Case1 or Case2.
    double phase_at(std::int64_t t) const;

    /// Base unitary U of a Case1/Case2 schedule. KindError otherwise.
    const CoinMatrix& base() const;

    /// Stored coin list of a periodic kind. KindError for Case1/Case2.
    const std::vector<CoinMatrix>& coins() const;

    double w0() const;
    double kappa() const;

private:
    CoinSchedule(ScheduleKind kind, std::vector<CoinMatrix> coins,
                 double w0, double kappa);

    ScheduleKind kind_;
    std::vector<CoinMatrix> coins_;  // periodic kinds; [base] for Case1/Case2
    double w0_ = 0.0;
    double kappa_ = 0.0;
};

/// The coin a Case1/Case2 schedule factorizes into:
///   Case1: R(w/2) U R(w/2),   Case2: R(w/2) U R(-w/2).
CoinMatrix phase_conjugated(const CoinMatrix& base, double w, ScheduleKind kind);

/// True iff coin_at(t) matches its diagonal-phase factorization entrywise
/// within tol::unitarity. KindError for non-phase schedule kinds.
bool conjugation_identity_check(const CoinSchedule& schedule, std::int64_t t);

}  // namespace qwalk
