#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qwalk/density.hpp"
#include "qwalk/schedule.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

struct ConvergenceRecord {
    std::int64_t t = 0;
    double ks = 0.0;
    std::vector<double> moment_err;  // r = 1..4
};

/// Result of a simulated-vs-limit comparison across a time list.
struct ConvergenceReport {
    nlohmann::json schedule_descriptor() const;
    nlohmann::json density_descriptor() const;
    nlohmann::json to_json() const;

    std::string schedule_json;  // serialized descriptors (kept verbatim)
    std::string density_json;
    std::vector<ConvergenceRecord> records;  // sorted by t ascending
    bool ks_final_ok = false;
    bool ks_trend_ok = false;
    bool pass = false;
};

/// Sup over the atoms x/t of |F_emp(x/t) - F(x/t)|, where F_emp is the
/// right-continuous CDF of the rescaled distribution and F the density CDF.
double ks_distance(const Distribution& dist, const LimitDensity& d);

/// Max absolute probability difference at time t between the Case-1 walk for
/// (U, w0, kappa1) and the one-period walk with coin U started from the
/// rotated spinor (e^{i w0/2} alpha, e^{-i w0/2} beta). This is an exact
/// identity, so the result is rounding noise. Throws DomainError for t > 2000.
double case1_reduction_check(Complex a, Complex b, Complex c, Complex d,
                             double w0, double kappa1,
                             Complex alpha, Complex beta, std::int64_t t);

/// Max over a 1001-point support grid of |f2(x) - f1(x)| where f2 is the
/// linear-phase density at w_t = pi t (i.e. w0 = 0, kappa2 = pi) and f1 the
/// two-period density of the pair H0 = [[a,b],[c,d]], H1 = [[a,-b],[-c,d]].
double theorem_equivalence_check(double a, double b, double c, double d,
                                 Complex alpha, Complex beta);

struct ConvergenceOptions {
    double ks_threshold = 0.05;
    double trend_slack = 0.01;
    std::string schedule_json = "{}";
    std::string density_json = "{}";
};

/// Simulate the schedule at each listed time (each time simulated once,
/// deterministically), record KS distances and rescaled moment errors for
/// r = 1..4, and set pass when the final KS beats the threshold and the KS
/// sequence is nonincreasing within the slack.
ConvergenceReport convergence_report(const CoinSchedule& schedule,
                                     const LimitDensity& d,
                                     const std::vector<std::int64_t>& t_list,
                                     Complex alpha, Complex beta,
                                     const ConvergenceOptions& options = {});

// Named verification sweeps shared by the CLI `verify` command and the
// acceptance suite. All randomness is a seeded mt19937, so reports are
// bit-identical across runs for the same inputs.

struct VerifyResult {
    bool pass = false;
    std::string report_json;
};

/// `count` random (unitary coin, w0, kappa1, alpha, beta) tuples at time t;
/// passes when every reduction error stays below 1e-12.
VerifyResult verify_case1_reduction(int count = 20, std::int64_t t = 200,
                                    std::uint64_t seed = 20120704);

/// `count` random real orthogonal coins and states; passes when the two
/// density routes agree below 1e-12 pointwise.
VerifyResult verify_theorem3_equivalence(int count = 20,
                                         std::uint64_t seed = 20120704);

/// Spectral identity sweep: closed-form eigenvalues vs direct eigensolve
/// (1e3 random triples, 1e-10), |lambda| = 1 (1e-12), analytic group velocity
/// vs central finite differences (1e-5), and sup_k |h| vs the min-|cos| rule
/// (1e-6).
VerifyResult verify_spectral(std::uint64_t seed = 20120704);

}  // namespace qwalk
