#include "qwalk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/numerics.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

using nlohmann::json;

nlohmann::json ConvergenceReport::schedule_descriptor() const {
    return json::parse(schedule_json);
}

nlohmann::json ConvergenceReport::density_descriptor() const {
    return json::parse(density_json);
}

nlohmann::json ConvergenceReport::to_json() const {
    json records_json = json::array();
    for (const ConvergenceRecord& rec : records) {
        records_json.push_back(
            {{"t", rec.t}, {"ks", rec.ks}, {"moment_err", rec.moment_err}});
    }
    return json{{"schedule", schedule_descriptor()},
                {"density", density_descriptor()},
                {"records", records_json},
                {"ks_final_ok", ks_final_ok},
                {"ks_trend_ok", ks_trend_ok},
                {"pass", pass}};
}

double ks_distance(const Distribution& dist, const LimitDensity& d) {
    if (dist.time < 1) {
        throw DomainError("ks_distance: distribution must have time >= 1");
    }
    double t = static_cast<double>(dist.time);
    KahanSum cumulative;
    double sup = 0.0;
    for (const auto& [x, p] : dist.entries) {
        cumulative.add(p);
        double rescaled = static_cast<double>(x) / t;
        double gap = std::abs(cumulative.value() - density_cdf(d, rescaled));
        sup = std::max(sup, gap);
    }
    return sup;
}

double case1_reduction_check(Complex a, Complex b, Complex c, Complex d,
                             double w0, double kappa1,
                             Complex alpha, Complex beta, std::int64_t t) {
    if (t < 0 || t > 2000) {
        throw DomainError("case1_reduction_check: t must be in 0..2000");
    }
    CoinMatrix base(a, b, c, d);
    CoinSchedule modulated = CoinSchedule::case1(base, w0, kappa1);
    CoinSchedule plain = CoinSchedule::one_period(base);

    Complex half_phase(std::cos(w0 / 2.0), std::sin(w0 / 2.0));
    WalkState lhs = evolve(new_walk(alpha, beta), modulated, t);
    WalkState rhs = evolve(new_walk(half_phase * alpha,
                                    std::conj(half_phase) * beta),
                           plain, t);

    Distribution dist_lhs = distribution(lhs);
    Distribution dist_rhs = distribution(rhs);
    double max_err = 0.0;
    for (std::size_t i = 0; i < dist_lhs.entries.size(); ++i) {
        max_err = std::max(max_err, std::abs(dist_lhs.entries[i].second -
                                             dist_rhs.entries[i].second));
    }
    return max_err;
}

double theorem_equivalence_check(double a, double b, double c, double d,
                                 Complex alpha, Complex beta) {
    CoinMatrix h0(a, b, c, d);
    CoinMatrix h1(a, -b, -c, d);
    // w_t = pi t alternates the sign of the off-diagonal entries, so the
    // linear-phase walk *is* the two-period pair (h0, h1).
    LimitDensity f2 = theorem3_density(Complex(a, 0.0), Complex(b, 0.0),
                                       alpha, beta, 0.0);
    LimitDensity f1 = theorem1_density(h0, h1, alpha, beta);

    double max_err = 0.0;
    const int points = 1001;
    double scale = std::max(f1.scale(), f2.scale());
    for (int i = 0; i < points; ++i) {
        double x = -scale + 2.0 * scale * i / (points - 1);
        max_err = std::max(max_err, std::abs(f2(x) - f1(x)));
    }
    return max_err;
}

ConvergenceReport convergence_report(const CoinSchedule& schedule,
                                     const LimitDensity& d,
                                     const std::vector<std::int64_t>& t_list,
                                     Complex alpha, Complex beta,
                                     const ConvergenceOptions& options) {
    if (t_list.empty()) {
        throw DomainError("convergence_report: t_list must not be empty");
    }
    if (!std::is_sorted(t_list.begin(), t_list.end())) {
        throw DomainError("convergence_report: t_list must be ascending");
    }

    ConvergenceReport report;
    report.schedule_json = options.schedule_json;
    report.density_json = options.density_json;

    // One incremental simulation, snapshotting each listed time.
    WalkState state = new_walk(alpha, beta);
    for (std::int64_t t : t_list) {
        state = evolve(state, schedule, t - state.time());
        Distribution dist = distribution(state);
        ConvergenceRecord rec;
        rec.t = t;
        rec.ks = ks_distance(dist, d);
        for (int r = 1; r <= 4; ++r) {
            rec.moment_err.push_back(std::abs(empirical_moment(dist, r, true) -
                                              density_moment(d, r)));
        }
        report.records.push_back(std::move(rec));
    }

    report.ks_final_ok = report.records.back().ks < options.ks_threshold;
    report.ks_trend_ok = true;
    for (std::size_t i = 1; i < report.records.size(); ++i) {
        if (report.records[i].ks > report.records[i - 1].ks + options.trend_slack) {
            report.ks_trend_ok = false;
        }
    }
    report.pass = report.ks_final_ok && report.ks_trend_ok;
    return report;
}

namespace {

// Random unitary with all entries nonzero: mixing angle kept away from the
// axes plus three free phases.
CoinMatrix random_unitary(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.15, std::numbers::pi / 2.0 - 0.15);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    double theta = angle(rng);
    double mu = phase(rng), nu = phase(rng), rho = phase(rng);
    Complex a = std::polar(std::cos(theta), mu);
    Complex b = std::polar(std::sin(theta), nu);
    Complex c = -std::polar(std::sin(theta), rho - nu);
    Complex d = std::polar(std::cos(theta), rho - mu);
    return CoinMatrix(a, b, c, d);
}

std::pair<Complex, Complex> random_state(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Complex alpha(gauss(rng), gauss(rng));
    Complex beta(gauss(rng), gauss(rng));
    double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    return {alpha / norm, beta / norm};
}

double random_clear_angle(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.1, std::numbers::pi / 2.0 - 0.1);
    return angle(rng);
}

}  // namespace

VerifyResult verify_case1_reduction(int count, std::int64_t t, std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    const double bound = 1e-12;
    json cases = json::array();
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        CoinMatrix u = random_unitary(rng);
        double w0 = phase(rng);
        double kappa1 = phase(rng);
        auto [alpha, beta] = random_state(rng);
        double err = case1_reduction_check(u.a(), u.b(), u.c(), u.d(),
                                           w0, kappa1, alpha, beta, t);
        worst = std::max(worst, err);
        cases.push_back({{"w0", w0}, {"kappa1", kappa1}, {"max_abs_error", err}});
    }
    VerifyResult result;
    result.pass = worst < bound;
    result.report_json = json{{"check", "case1-reduction"},
                              {"count", count},
                              {"t", t},
                              {"bound", bound},
                              {"worst_error", worst},
                              {"cases", cases},
                              {"pass", result.pass}}
                             .dump();
    return result;
}

VerifyResult verify_theorem3_equivalence(int count, std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));

    const double bound = 1e-12;
    json cases = json::array();
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        double theta = random_clear_angle(rng);
        // Alternate between the reflection and rotation forms of a real
        // orthogonal coin.
        CoinMatrix coin = (i % 2 == 0) ? orthogonal_coin(theta) : rotation_coin(theta);
        auto [alpha, beta] = random_state(rng);
        double err = theorem_equivalence_check(coin.a().real(), coin.b().real(),
                                               coin.c().real(), coin.d().real(),
                                               alpha, beta);
        worst = std::max(worst, err);
        cases.push_back({{"theta", theta},
                         {"form", i % 2 == 0 ? "reflection" : "rotation"},
                         {"max_abs_error", err}});
    }
    VerifyResult result;
    result.pass = worst < bound;
    result.report_json = json{{"check", "theorem3-equiv"},
                              {"count", count},
                              {"bound", bound},
                              {"worst_error", worst},
                              {"cases", cases},
                              {"pass", result.pass}}
                             .dump();
    return result;
}

namespace {

// Central difference of the eigenphase, using the principal-value increment
// arg(lambda(k+e) conj(lambda(k-e))) so branch-cut crossings cancel.
double finite_difference_velocity(double theta0, double theta1, double k, int j) {
    const double eps = 1e-6;
    Complex plus = two_period_eigenvalue(theta0, theta1, k + eps, j);
    Complex minus = two_period_eigenvalue(theta0, theta1, k - eps, j);
    double dphi = std::arg(plus * std::conj(minus));
    return -dphi / (4.0 * eps);
}

double grid_velocity_sup(double theta0, double theta1) {
    const int n = 100000;
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        double k = 2.0 * std::numbers::pi * (i + 0.5) / n;
        double a = std::cos(theta0) * std::cos(theta1) * std::cos(2.0 * k) +
                   std::sin(theta0) * std::sin(theta1);
        if (1.0 - a * a < 1e-12) continue;
        sup = std::max(sup, std::abs(group_velocity(theta0, theta1, k, 0)));
    }
    return sup;
}

}  // namespace

VerifyResult verify_spectral(std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_real_distribution<double> wavenumber(0.0, 2.0 * std::numbers::pi);

    // (a) closed-form eigenvalues vs direct eigensolve, and |lambda| = 1.
    double worst_eigen = 0.0;
    double worst_modulus = 0.0;
    Spinor probe(1.0, 0.0);
    for (int i = 0; i < 1000; ++i) {
        double theta0 = random_clear_angle(rng);
        double theta1 = random_clear_angle(rng);
        if (std::abs(theta0 - theta1) < 0.05) continue;
        double k = wavenumber(rng);
        EigenSystem sys;
        try {
            sys = two_period_eigensystem(theta0, theta1, k, probe);
        } catch (const DegenerateSymbolError&) {
            continue;
        }
        worst_eigen = std::max(
            worst_eigen,
            std::abs(sys.lambda0 - two_period_eigenvalue(theta0, theta1, k, 0)));
        worst_eigen = std::max(
            worst_eigen,
            std::abs(sys.lambda1 - two_period_eigenvalue(theta0, theta1, k, 1)));
        worst_modulus = std::max(worst_modulus,
                                 std::abs(std::abs(sys.lambda0) - 1.0));
        worst_modulus = std::max(worst_modulus,
                                 std::abs(std::abs(sys.lambda1) - 1.0));
    }

    // (b) analytic group velocity vs central finite differences.
    double worst_gradient = 0.0;
    for (int i = 0; i < 200; ++i) {
        double theta0 = random_clear_angle(rng);
        double theta1 = random_clear_angle(rng);
        if (std::abs(theta0 - theta1) < 0.05) continue;
        double k = wavenumber(rng);
        double a = std::cos(theta0) * std::cos(theta1) * std::cos(2.0 * k) +
                   std::sin(theta0) * std::sin(theta1);
        // Keep a margin from stationary points, where the eigenphase
        // curvature blows up the truncation error.
        if (1.0 - a * a < 1e-2) continue;
        for (int j = 0; j < 2; ++j) {
            double analytic = group_velocity(theta0, theta1, k, j);
            double numeric = finite_difference_velocity(theta0, theta1, k, j);
            worst_gradient = std::max(worst_gradient, std::abs(analytic - numeric));
        }
    }

    // (c) sup_k |h_j(k)| equals min(|cos theta0|, |cos theta1|).
    double worst_sup = 0.0;
    const std::pair<double, double> pairs[] = {
        {std::numbers::pi / 4.0, std::numbers::pi / 6.0},
        {std::numbers::pi / 4.0, std::numbers::pi / 3.0},
        {std::numbers::pi / 5.0, 0.9},
        {0.3, 1.2},
    };
    for (const auto& [theta0, theta1] : pairs) {
        double expected = std::min(std::abs(std::cos(theta0)),
                                   std::abs(std::cos(theta1)));
        worst_sup = std::max(worst_sup,
                             std::abs(grid_velocity_sup(theta0, theta1) - expected));
    }

    bool pass = worst_eigen < 1e-10 && worst_modulus < 1e-12 &&
                worst_gradient < 1e-5 && worst_sup < 1e-6;
    VerifyResult result;
    result.pass = pass;
    result.report_json =
        json{{"check", "spectral"},
             {"eigenvalue_closed_vs_numeric", {{"worst", worst_eigen}, {"bound", 1e-10}}},
             {"eigenvalue_modulus", {{"worst", worst_modulus}, {"bound", 1e-12}}},
             {"group_velocity_gradient", {{"worst", worst_gradient}, {"bound", 1e-5}}},
             {"group_velocity_sup_rule", {{"worst", worst_sup}, {"bound", 1e-6}}},
             {"pass", pass}}
            .dump();
    return result;
}

}  // namespace qwalk
