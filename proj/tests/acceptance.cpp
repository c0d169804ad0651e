// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line;
// the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qwalk/density.hpp"
#include "qwalk/harness.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

const double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Complex kAlphaSym(kInvSqrt2, 0.0);
const Complex kBetaSym(0.0, kInvSqrt2);

int failures = 0;

void criterion(int index, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool figure_reproduction(double theta0, double theta1, double scale,
                         std::string& detail) {
    auto start = std::chrono::steady_clock::now();

    CoinSchedule schedule = CoinSchedule::two_period(orthogonal_coin(theta0),
                                                     orthogonal_coin(theta1));
    Distribution dist =
        distribution(evolve(new_walk(kAlphaSym, kBetaSym), schedule, 500));
    LimitDensity konno(scale, 0.0, "konno");
    double ks = ks_distance(dist, konno);
    double m2_walk = empirical_moment(dist, 2, true);
    double m2_limit = density_moment(konno, 2);

    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();

    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "KS=%.4f (<0.05), |m2-%.5f|=%.5f (<0.02), %.2fs (<5s)",
                  ks, m2_limit, std::abs(m2_walk - m2_limit), seconds);
    detail = buffer;
    return ks < 0.05 && std::abs(m2_walk - m2_limit) < 0.02 && seconds < 5.0;
}

}  // namespace

int main() {
    criterion(1, "two-period (pi/4, pi/6) at t=500 reproduces f_K(.;cos pi/4)",
              [](std::string& detail) {
                  return figure_reproduction(kPi / 4.0, kPi / 6.0,
                                             std::cos(kPi / 4.0), detail);
              });

    criterion(2, "two-period (pi/4, pi/3) at t=500 reproduces f_K(.;cos pi/3)",
              [](std::string& detail) {
                  return figure_reproduction(kPi / 4.0, kPi / 3.0,
                                             std::cos(kPi / 3.0), detail);
              });

    criterion(3, "alternating-phase walk reduces exactly to the one-period walk",
              [](std::string& detail) {
                  VerifyResult result = verify_case1_reduction(20, 200);
                  detail = result.pass ? "20 random tuples, max error < 1e-12"
                                       : result.report_json;
                  return result.pass;
              });

    criterion(4, "linear-phase density at w_t = pi t equals the two-period density",
              [](std::string& detail) {
                  VerifyResult result = verify_theorem3_equivalence(20);
                  detail = result.pass ? "20 random coins, pointwise < 1e-12"
                                       : result.report_json;
                  return result.pass;
              });

    criterion(5, "spectral identities: closed forms, unit modulus, gradients, sup rule",
              [](std::string& detail) {
                  VerifyResult result = verify_spectral();
                  detail = result.report_json;
                  return result.pass;
              });

    criterion(6, "Fourier-side moments equal closed-form density moments (r <= 6)",
              [](std::string& detail) {
                  std::mt19937 rng(61);
                  std::uniform_real_distribution<double> angle(0.15,
                                                               kPi / 2.0 - 0.15);
                  std::normal_distribution<double> gauss(0.0, 1.0);
                  double worst = 0.0;
                  for (int i = 0; i < 20; ++i) {
                      double theta0 = angle(rng);
                      double theta1 = angle(rng);
                      if (std::abs(theta0 - theta1) < 0.05) {
                          theta1 = theta0 + 0.3;
                      }
                      Complex alpha(gauss(rng), gauss(rng));
                      Complex beta(gauss(rng), gauss(rng));
                      double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
                      alpha /= norm;
                      beta /= norm;

                      LimitDensity d = theorem1_density(theta0, theta1, alpha, beta);
                      std::vector<double> fourier =
                          limit_moments(theta0, theta1, alpha, beta, 6);
                      for (int r = 0; r <= 6; ++r) {
                          worst = std::max(
                              worst, std::abs(fourier[static_cast<std::size_t>(r)] -
                                              density_moment(d, r)));
                      }
                  }
                  char buffer[96];
                  std::snprintf(buffer, sizeof(buffer),
                                "20 random sets, worst |difference| = %.2e (<1e-5)",
                                worst);
                  detail = buffer;
                  return worst < 1e-5;
              });

    criterion(7, "norm, parity, and cone support through t=2000 for every kind",
              [](std::string& detail) {
                  CoinMatrix hadamard = orthogonal_coin(kPi / 4.0);
                  std::vector<std::pair<std::string, CoinSchedule>> schedules;
                  schedules.emplace_back("one-period",
                                         CoinSchedule::one_period(hadamard));
                  schedules.emplace_back(
                      "n-period",
                      CoinSchedule::n_period({orthogonal_coin(0.4),
                                              orthogonal_coin(0.9),
                                              orthogonal_coin(1.3)}));
                  schedules.emplace_back(
                      "two-period",
                      CoinSchedule::two_period(hadamard,
                                               orthogonal_coin(kPi / 6.0)));
                  schedules.emplace_back(
                      "case1", CoinSchedule::case1(hadamard, 0.7, 1.3));
                  schedules.emplace_back(
                      "case2", CoinSchedule::case2(hadamard, 0.2, 0.61));

                  double worst_norm = 0.0;
                  for (const auto& [name, schedule] : schedules) {
                      WalkState state =
                          evolve(new_walk(kAlphaSym, kBetaSym), schedule, 2000);
                      worst_norm = std::max(
                          worst_norm, std::abs(total_probability(state) - 1.0));
                      for (std::int64_t x = -2000; x <= 2000; ++x) {
                          if ((x + 2000) % 2 == 1 &&
                              (std::abs(state.at(x)[0]) != 0.0 ||
                               std::abs(state.at(x)[1]) != 0.0)) {
                              detail = name + ": nonzero wrong-parity site";
                              return false;
                          }
                      }
                      if (std::abs(state.at(2001)[0]) != 0.0 ||
                          std::abs(state.at(-2001)[1]) != 0.0) {
                          detail = name + ": amplitude outside the cone";
                          return false;
                      }
                      for (const auto& [x, p] : distribution(state).entries) {
                          if (x < -2000 || x > 2000) {
                              detail = name + ": distribution site outside the cone";
                              return false;
                          }
                      }
                  }
                  char buffer[96];
                  std::snprintf(buffer, sizeof(buffer),
                                "worst |total-1| = %.2e (<1e-12), parity exact",
                                worst_norm);
                  detail = buffer;
                  return worst_norm < 1e-12;
              });

    criterion(8, "skewed start (alpha,beta)=(1,0) drifts by the weighted mean",
              [](std::string& detail) {
                  CoinSchedule schedule = CoinSchedule::two_period(
                      orthogonal_coin(kPi / 4.0), orthogonal_coin(kPi / 6.0));
                  Distribution dist = distribution(
                      evolve(new_walk(1.0, 0.0), schedule, 500));
                  double mean = empirical_moment(dist, 1, true);

                  LimitDensity d =
                      theorem1_density(kPi / 4.0, kPi / 6.0, 1.0, 0.0);
                  double predicted = density_moment(d, 1);

                  char buffer[120];
                  std::snprintf(buffer, sizeof(buffer),
                                "mean=%.5f, limit=%.5f (negative), |diff|=%.5f (<0.02)",
                                mean, predicted, std::abs(mean - predicted));
                  detail = buffer;
                  return predicted < 0.0 && std::abs(mean - predicted) < 0.02;
              });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
