#include "qwalk/walk.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/numerics.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

Spinor WalkState::at(std::int64_t x) const {
    if (x < -time_ || x > time_) return Spinor::Zero();
    return amps_[static_cast<std::size_t>(x + time_)];
}

WalkState WalkState::from_amplitudes(std::int64_t time, std::vector<Spinor> amps) {
    if (time < 0 || amps.size() != static_cast<std::size_t>(2 * time + 1)) {
        throw DomainError("from_amplitudes: field must cover -time..time");
    }
    for (const Spinor& s : amps) {
        if (!std::isfinite(s[0].real()) || !std::isfinite(s[0].imag()) ||
            !std::isfinite(s[1].real()) || !std::isfinite(s[1].imag())) {
            throw DomainError("from_amplitudes: non-finite amplitude");
        }
    }
    return WalkState(time, std::move(amps));
}

WalkState new_walk(Complex alpha, Complex beta) {
    double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > tol::state_norm) {
        throw NormalizationError("new_walk: |alpha|^2 + |beta|^2 = " +
                                 std::to_string(norm) + ", expected 1");
    }
    std::vector<Spinor> amps(1);
    amps[0] = Spinor(alpha, beta);
    return WalkState(0, std::move(amps));
}

WalkState step(const WalkState& state, const CoinMatrix& coin) {
    require_unitary(coin, "step");

    std::int64_t t = state.time();
    const std::vector<Spinor>& prev = state.amplitudes();
    std::vector<Spinor> next(static_cast<std::size_t>(2 * (t + 1) + 1),
                             Spinor::Zero());

    Complex a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();

    // psi'(x) = P psi(x+1) + Q psi(x-1); index i maps to x = i - (t+1).
    auto source = [&](std::int64_t x) -> Spinor {
        if (x < -t || x > t) return Spinor::Zero();
        return prev[static_cast<std::size_t>(x + t)];
    };
    for (std::int64_t x = -(t + 1); x <= t + 1; ++x) {
        Spinor from_right = source(x + 1);
        Spinor from_left = source(x - 1);
        Spinor& out = next[static_cast<std::size_t>(x + t + 1)];
        out[0] = a * from_right[0] + b * from_right[1];
        out[1] = c * from_left[0] + d * from_left[1];
    }
    return WalkState(t + 1, std::move(next));
}

WalkState evolve(const WalkState& state, const CoinSchedule& schedule,
                 std::int64_t steps) {
    if (steps < 0) {
        throw DomainError("evolve: steps must be nonnegative");
    }
    WalkState current = state;
    std::int64_t start = state.time();
    for (std::int64_t t = start; t < start + steps; ++t) {
        current = step(current, schedule.coin_at(t));
    }
    return current;
}

Distribution distribution(const WalkState& state) {
    std::int64_t t = state.time();
    Distribution dist;
    dist.time = t;
    dist.entries.reserve(static_cast<std::size_t>(t + 1));
    // Sites with x == t (mod 2), i.e. even array index.
    for (std::int64_t x = -t; x <= t; x += 2) {
        const Spinor& s = state.amplitudes()[static_cast<std::size_t>(x + t)];
        dist.entries.emplace_back(x, std::norm(s[0]) + std::norm(s[1]));
    }
    return dist;
}

double total_probability(const WalkState& state) {
    KahanSum sum;
    for (const Spinor& s : state.amplitudes()) {
        sum.add(std::norm(s[0]) + std::norm(s[1]));
    }
    return sum.value();
}

double empirical_moment(const Distribution& dist, int r, bool rescale) {
    if (r < 0 || r > 16) {
        throw DomainError("empirical_moment: order must be in 0..16, got " +
                          std::to_string(r));
    }
    if (rescale && dist.time == 0) {
        throw DomainError("empirical_moment: cannot rescale a time-0 distribution");
    }
    KahanSum sum;
    for (const auto& [x, p] : dist.entries) {
        sum.add(integer_power(static_cast<double>(x), r) * p);
    }
    if (!rescale) return sum.value();
    return sum.value() / integer_power(static_cast<double>(dist.time), r);
}

double standard_deviation(const Distribution& dist) {
    double m1 = empirical_moment(dist, 1, false);
    double m2 = empirical_moment(dist, 2, false);
    double var = m2 - m1 * m1;
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

}  // namespace qwalk
