#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/coin.hpp"

namespace qwalk::cli {

/// Everything a subcommand needs, assembled from flags and/or --config.
/// Round-trips losslessly through its JSON form.
struct RunConfig {
    std::string subcommand;

    nlohmann::json schedule;  // schedule descriptor (see schedule_from_json)
    Complex alpha{1.0 / std::numbers::sqrt2, 0.0};
    Complex beta{0.0, 1.0 / std::numbers::sqrt2};

    std::int64_t t = 500;
    std::vector<std::int64_t> t_list;

    std::string format = "csv";  // csv | json
    std::string out;             // empty = stdout

    // density selection (density/moments subcommands); angle and coin
    // defaults mirror the headline two-period configuration
    std::string density_kind;  // konno | theorem1 | theorem2 | theorem3
    double a_mod = 1.0 / std::numbers::sqrt2;
    double theta0 = std::numbers::pi / 4.0;
    double theta1 = std::numbers::pi / 6.0;
    Complex coin_a{1.0 / std::numbers::sqrt2, 0.0};
    Complex coin_b{1.0 / std::numbers::sqrt2, 0.0};
    double w0 = 0.0;
    int grid_points = 1001;

    // spectrum
    int k_points = 1001;

    // moments
    int r_max = 4;
    bool rescale = true;

    // verify
    std::string check;
    double ks_threshold = 0.05;
    double trend_slack = 0.01;

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

/// Exit codes: 0 success, 1 numeric or verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace qwalk::cli
