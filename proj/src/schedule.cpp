#include "qwalk/schedule.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qwalk/errors.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

namespace {

Complex unit_phase(double w) {
    // Reduce mod 2pi before the trig calls; Case2 phases grow linearly with t
    // and large arguments degrade accuracy.
    double reduced = std::remainder(w, 2.0 * std::numbers::pi);
    return Complex(std::cos(reduced), std::sin(reduced));
}

}  // namespace

CoinSchedule::CoinSchedule(ScheduleKind kind, std::vector<CoinMatrix> coins,
                           double w0, double kappa)
    : kind_(kind), coins_(std::move(coins)), w0_(w0), kappa_(kappa) {}

CoinSchedule CoinSchedule::one_period(const CoinMatrix& coin) {
    require_unitary(coin, "one_period");
    require_nonzero_entries(coin, "one_period");
    return CoinSchedule(ScheduleKind::OnePeriod, {coin}, 0.0, 0.0);
}

CoinSchedule CoinSchedule::n_period(std::vector<CoinMatrix> coins) {
    if (coins.empty()) {
        throw DomainError("n_period: coin list must not be empty");
    }
    for (const CoinMatrix& coin : coins) {
        require_unitary(coin, "n_period");
        require_nonzero_entries(coin, "n_period");
    }
    return CoinSchedule(ScheduleKind::NPeriod, std::move(coins), 0.0, 0.0);
}

CoinSchedule CoinSchedule::two_period(const CoinMatrix& h0, const CoinMatrix& h1) {
    require_unitary(h0, "two_period");
    require_unitary(h1, "two_period");
    require_nonzero_entries(h0, "two_period");
    require_nonzero_entries(h1, "two_period");
    return CoinSchedule(ScheduleKind::TwoPeriodOrthogonal, {h0, h1}, 0.0, 0.0);
}

CoinSchedule CoinSchedule::case1(const CoinMatrix& base, double w0, double kappa1) {
    require_unitary(base, "case1");
    require_nonzero_entries(base, "case1");
    return CoinSchedule(ScheduleKind::Case1, {base}, w0, kappa1);
}

CoinSchedule CoinSchedule::case2(const CoinMatrix& base, double w0, double kappa2) {
    require_unitary(base, "case2");
    require_nonzero_entries(base, "case2");
    return CoinSchedule(ScheduleKind::Case2, {base}, w0, kappa2);
}

double CoinSchedule::phase_at(std::int64_t t) const {
    switch (kind_) {
        case ScheduleKind::Case1: {
            // w_{t+1} + w_t = kappa solved in closed form, not iterated.
            double sign = (t % 2 == 0) ? 1.0 : -1.0;
            return sign * (w0_ - kappa_ / 2.0) + kappa_ / 2.0;
        }
        case ScheduleKind::Case2:
            return kappa_ * static_cast<double>(t) + w0_;
        default:
            throw KindError("phase_at: schedule has no phase parameter");
    }
}

CoinMatrix CoinSchedule::coin_at(std::int64_t t) const {
    switch (kind_) {
        case ScheduleKind::OnePeriod:
            return coins_[0];
        case ScheduleKind::NPeriod:
        case ScheduleKind::TwoPeriodOrthogonal: {
            auto n = static_cast<std::int64_t>(coins_.size());
            return coins_[static_cast<std::size_t>(((t % n) + n) % n)];
        }
        case ScheduleKind::Case1: {
            Complex phase = unit_phase(phase_at(t));
            const CoinMatrix& u = coins_[0];
            return CoinMatrix(u.a() * phase, u.b(), u.c(), u.d() * std::conj(phase));
        }
        case ScheduleKind::Case2: {
            Complex phase = unit_phase(phase_at(t));
            const CoinMatrix& u = coins_[0];
            return CoinMatrix(u.a(), u.b() * phase, u.c() * std::conj(phase), u.d());
        }
    }
    throw InternalError("coin_at: unhandled schedule kind");
}

const CoinMatrix& CoinSchedule::base() const {
    if (kind_ != ScheduleKind::Case1 && kind_ != ScheduleKind::Case2) {
        throw KindError("base: only phase-family schedules have a base coin");
    }
    return coins_[0];
}

const std::vector<CoinMatrix>& CoinSchedule::coins() const {
    if (kind_ == ScheduleKind::Case1 || kind_ == ScheduleKind::Case2) {
        throw KindError("coins: phase-family schedules store a base coin, not a list");
    }
    return coins_;
}

double CoinSchedule::w0() const {
    if (kind_ != ScheduleKind::Case1 && kind_ != ScheduleKind::Case2) {
        throw KindError("w0: schedule has no phase parameter");
    }
    return w0_;
}

double CoinSchedule::kappa() const {
    if (kind_ != ScheduleKind::Case1 && kind_ != ScheduleKind::Case2) {
        throw KindError("kappa: schedule has no phase parameter");
    }
    return kappa_;
}

CoinMatrix phase_conjugated(const CoinMatrix& base, double w, ScheduleKind kind) {
    Eigen::Matrix2cd left = phase_matrix(w / 2.0);
    Eigen::Matrix2cd right;
    if (kind == ScheduleKind::Case1) {
        right = phase_matrix(w / 2.0);
    } else if (kind == ScheduleKind::Case2) {
        right = phase_matrix(-w / 2.0);
    } else {
        throw KindError("phase_conjugated: only Case1/Case2 factorize this way");
    }
    return CoinMatrix(left * base.matrix() * right);
}

bool conjugation_identity_check(const CoinSchedule& schedule, std::int64_t t) {
    ScheduleKind kind = schedule.kind();
    if (kind != ScheduleKind::Case1 && kind != ScheduleKind::Case2) {
        throw KindError("conjugation_identity_check: schedule kind has no "
                        "diagonal-phase factorization");
    }
    CoinMatrix direct = schedule.coin_at(t);
    CoinMatrix factored = phase_conjugated(schedule.base(), schedule.phase_at(t), kind);
    return direct.entrywise_distance(factored) <= tol::unitarity;
}

}  // namespace qwalk
