#include "qwalk/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/density.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/harness.hpp"
#include "qwalk/io.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // numeric or verification failure
constexpr int kExitUsage = 2;     // bad flags or config

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) parts.push_back(item);
    return parts;
}

}  // namespace

json RunConfig::to_json() const {
    return json{{"subcommand", subcommand},
                {"schedule", schedule},
                {"alpha", complex_to_json(alpha)},
                {"beta", complex_to_json(beta)},
                {"t", t},
                {"t_list", t_list},
                {"format", format},
                {"out", out},
                {"density_kind", density_kind},
                {"a_mod", a_mod},
                {"theta0", theta0},
                {"theta1", theta1},
                {"coin_a", complex_to_json(coin_a)},
                {"coin_b", complex_to_json(coin_b)},
                {"w0", w0},
                {"grid_points", grid_points},
                {"k_points", k_points},
                {"r_max", r_max},
                {"rescale", rescale},
                {"check", check},
                {"ks_threshold", ks_threshold},
                {"trend_slack", trend_slack}};
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig cfg;
    auto get = [&j](const char* key, auto& target) {
        if (j.contains(key)) target = j[key].get<std::decay_t<decltype(target)>>();
    };
    get("subcommand", cfg.subcommand);
    if (j.contains("schedule")) cfg.schedule = j["schedule"];
    if (j.contains("alpha")) cfg.alpha = complex_from_json(j["alpha"], "alpha");
    if (j.contains("beta")) cfg.beta = complex_from_json(j["beta"], "beta");
    get("t", cfg.t);
    get("t_list", cfg.t_list);
    get("format", cfg.format);
    get("out", cfg.out);
    get("density_kind", cfg.density_kind);
    get("a_mod", cfg.a_mod);
    get("theta0", cfg.theta0);
    get("theta1", cfg.theta1);
    if (j.contains("coin_a")) cfg.coin_a = complex_from_json(j["coin_a"], "coin_a");
    if (j.contains("coin_b")) cfg.coin_b = complex_from_json(j["coin_b"], "coin_b");
    get("w0", cfg.w0);
    get("grid_points", cfg.grid_points);
    get("k_points", cfg.k_points);
    get("r_max", cfg.r_max);
    get("rescale", cfg.rescale);
    get("check", cfg.check);
    get("ks_threshold", cfg.ks_threshold);
    get("trend_slack", cfg.trend_slack);
    return cfg;
}

namespace {

// Raw flag values; merged into a RunConfig after parsing so --config can
// supply anything the command line leaves out.
struct FlagValues {
    std::string config_path;
    std::string schedule_kind;
    double theta = std::numbers::pi / 4.0;
    double theta0 = std::numbers::pi / 4.0;
    double theta1 = std::numbers::pi / 6.0;
    std::string thetas;
    // Hadamard-style coin unless overridden.
    std::string coin_a = "0.7071067811865476,0";
    std::string coin_b = "0.7071067811865476,0";
    std::string coin_c = "0.7071067811865476,0";
    std::string coin_d = "-0.7071067811865476,0";
    double w0 = 0.0;
    double kappa = 0.0;
    std::string alpha, beta;
    std::int64_t t = 500;
    std::string t_list;
    std::string format = "csv";
    std::string out;
    std::string density_kind;
    double a_mod = 1.0 / std::numbers::sqrt2;
    int grid_points = 1001;
    int k_points = 1001;
    int r_max = 4;
    bool no_rescale = false;
    std::string check;
    double ks_threshold = 0.05;
    double trend_slack = 0.01;
};

bool flag_passed(const CLI::App& sub, const std::string& name) {
    const CLI::Option* opt = sub.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

json coin_descriptor_from_flags(const FlagValues& flags) {
    return json{{"a", complex_to_json(parse_complex(flags.coin_a, "coin-a"))},
                {"b", complex_to_json(parse_complex(flags.coin_b, "coin-b"))},
                {"c", complex_to_json(parse_complex(flags.coin_c, "coin-c"))},
                {"d", complex_to_json(parse_complex(flags.coin_d, "coin-d"))}};
}

json schedule_descriptor_from_flags(const CLI::App& sub, const FlagValues& flags) {
    json descriptor{{"kind", flags.schedule_kind}};
    if (flags.schedule_kind == "one-period") {
        if (flag_passed(sub, "--coin-a")) {
            descriptor["coin"] = coin_descriptor_from_flags(flags);
        } else {
            descriptor["theta"] = flags.theta;
        }
    } else if (flags.schedule_kind == "two-period") {
        descriptor["theta0"] = flags.theta0;
        descriptor["theta1"] = flags.theta1;
    } else if (flags.schedule_kind == "n-period") {
        json thetas = json::array();
        for (const std::string& part : split_commas(flags.thetas)) {
            try {
                thetas.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw DomainError("thetas: expected a comma-separated list of "
                                  "angles, got `" + flags.thetas + "`");
            }
        }
        descriptor["thetas"] = thetas;
    } else if (flags.schedule_kind == "case1" || flags.schedule_kind == "case2") {
        descriptor["coin"] = coin_descriptor_from_flags(flags);
        descriptor["w0"] = flags.w0;
        descriptor["kappa"] = flags.kappa;
    } else {
        throw DomainError("schedule: unknown kind `" + flags.schedule_kind + "`");
    }
    return descriptor;
}

void apply_flags(const CLI::App& sub, const FlagValues& flags, RunConfig& cfg) {
    if (flag_passed(sub, "--schedule")) {
        cfg.schedule = schedule_descriptor_from_flags(sub, flags);
    }
    if (flag_passed(sub, "--alpha")) cfg.alpha = parse_complex(flags.alpha, "alpha");
    if (flag_passed(sub, "--beta")) cfg.beta = parse_complex(flags.beta, "beta");
    if (flag_passed(sub, "--t")) cfg.t = flags.t;
    if (flag_passed(sub, "--t-list")) {
        cfg.t_list.clear();
        for (const std::string& part : split_commas(flags.t_list)) {
            try {
                cfg.t_list.push_back(std::stoll(part));
            } catch (const std::exception&) {
                throw DomainError("t-list: expected comma-separated integers, "
                                  "got `" + flags.t_list + "`");
            }
        }
    }
    if (flag_passed(sub, "--format")) cfg.format = flags.format;
    if (flag_passed(sub, "--out")) cfg.out = flags.out;
    if (flag_passed(sub, "--density")) cfg.density_kind = flags.density_kind;
    if (flag_passed(sub, "--a-mod")) cfg.a_mod = flags.a_mod;
    if (flag_passed(sub, "--theta0")) cfg.theta0 = flags.theta0;
    if (flag_passed(sub, "--theta1")) cfg.theta1 = flags.theta1;
    if (flag_passed(sub, "--coin-a")) cfg.coin_a = parse_complex(flags.coin_a, "coin-a");
    if (flag_passed(sub, "--coin-b")) cfg.coin_b = parse_complex(flags.coin_b, "coin-b");
    if (flag_passed(sub, "--w0")) cfg.w0 = flags.w0;
    if (flag_passed(sub, "--grid-points")) cfg.grid_points = flags.grid_points;
    if (flag_passed(sub, "--k-points")) cfg.k_points = flags.k_points;
    if (flag_passed(sub, "--r-max")) cfg.r_max = flags.r_max;
    if (flag_passed(sub, "--no-rescale")) cfg.rescale = !flags.no_rescale;
    if (flag_passed(sub, "--check")) cfg.check = flags.check;
    if (flag_passed(sub, "--ks-threshold")) cfg.ks_threshold = flags.ks_threshold;
    if (flag_passed(sub, "--slack")) cfg.trend_slack = flags.trend_slack;
}

RunConfig merge_config(const CLI::App& sub, const FlagValues& flags,
                       const std::string& subcommand) {
    RunConfig cfg;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) {
            throw DomainError("config: cannot open `" + flags.config_path + "`");
        }
        json parsed;
        try {
            parsed = json::parse(in);
        } catch (const json::exception& e) {
            throw DomainError("config: invalid JSON (" + std::string(e.what()) + ")");
        }
        cfg = RunConfig::from_json(parsed);
    }
    apply_flags(sub, flags, cfg);
    cfg.subcommand = subcommand;
    return cfg;
}

/// Writes to cfg.out, or stdout when no path is set.
void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw DomainError("out: cannot open `" + cfg.out + "` for writing");
    }
    file << payload;
}

LimitDensity density_from_config(const RunConfig& cfg) {
    if (cfg.density_kind == "konno") {
        return LimitDensity(cfg.a_mod, 0.0, "konno");
    }
    if (cfg.density_kind == "theorem1") {
        return theorem1_density(cfg.theta0, cfg.theta1, cfg.alpha, cfg.beta);
    }
    if (cfg.density_kind == "theorem2") {
        return theorem2_density(cfg.coin_a, cfg.coin_b, cfg.alpha, cfg.beta, cfg.w0);
    }
    if (cfg.density_kind == "theorem3") {
        return theorem3_density(cfg.coin_a, cfg.coin_b, cfg.alpha, cfg.beta, cfg.w0);
    }
    throw DomainError("density: unknown kind `" + cfg.density_kind +
                      "` (expected konno|theorem1|theorem2|theorem3)");
}

int cmd_simulate(const RunConfig& cfg) {
    CoinSchedule schedule = schedule_from_json(cfg.schedule);
    WalkState state = new_walk(cfg.alpha, cfg.beta);

    state = evolve(state, schedule, cfg.t);
    Distribution dist = distribution(state);

    std::ostringstream payload;
    if (cfg.format == "json") {
        payload << distribution_to_json(dist).dump(2) << '\n';
    } else {
        write_distribution_csv(payload, dist);
    }
    emit(cfg, payload.str());
    return kExitOk;
}

int cmd_density(const RunConfig& cfg) {
    LimitDensity density = density_from_config(cfg);

    if (cfg.grid_points < 2) {
        throw DomainError("grid-points: need at least 2");
    }
    double lo = -density.scale() - 0.05;
    double hi = density.scale() + 0.05;
    std::ostringstream payload;
    if (cfg.format == "json") {
        json grid = json::array();
        for (int i = 0; i < cfg.grid_points; ++i) {
            double x = lo + (hi - lo) * i / (cfg.grid_points - 1);
            grid.push_back({x, density(x)});
        }
        json j = density_to_json(density);
        j["grid"] = grid;
        payload << j.dump(2) << '\n';
    } else {
        payload << "x,f\n";
        for (int i = 0; i < cfg.grid_points; ++i) {
            double x = lo + (hi - lo) * i / (cfg.grid_points - 1);
            payload << format_shortest(x) << ',' << format_shortest(density(x))
                    << '\n';
        }
    }
    emit(cfg, payload.str());
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg) {
    require_walk_angle(cfg.theta0, "theta0");
    require_walk_angle(cfg.theta1, "theta1");
    if (cfg.k_points < 1) {
        throw DomainError("k-points: need at least 1");
    }

    std::ostringstream payload;
    payload << "k,re_lambda0,im_lambda0,re_lambda1,im_lambda1,h0,h1\n";
    for (int m = 0; m < cfg.k_points; ++m) {
        double k = 2.0 * std::numbers::pi * m / cfg.k_points;
        Complex l0 = two_period_eigenvalue(cfg.theta0, cfg.theta1, k, 0);
        Complex l1 = two_period_eigenvalue(cfg.theta0, cfg.theta1, k, 1);
        payload << format_shortest(k) << ',' << format_shortest(l0.real()) << ','
                << format_shortest(l0.imag()) << ',' << format_shortest(l1.real())
                << ',' << format_shortest(l1.imag()) << ',';
        try {
            double h0 = group_velocity(cfg.theta0, cfg.theta1, k, 0);
            payload << format_shortest(h0) << ',' << format_shortest(-h0) << '\n';
        } catch (const DegenerateSymbolError&) {
            payload << "nan,nan\n";
        }
    }
    emit(cfg, payload.str());
    return kExitOk;
}

int cmd_moments(const RunConfig& cfg) {
    CoinSchedule schedule = schedule_from_json(cfg.schedule);
    if (cfg.r_max < 1 || cfg.r_max > 16) {
        throw DomainError("r-max: order must be in 1..16");
    }
    std::optional<LimitDensity> density;
    if (!cfg.density_kind.empty()) density = density_from_config(cfg);

    Distribution dist = distribution(evolve(new_walk(cfg.alpha, cfg.beta),
                                            schedule, cfg.t));

    std::ostringstream payload;
    if (cfg.format == "json") {
        json rows = json::array();
        for (int r = 1; r <= cfg.r_max; ++r) {
            json row{{"r", r},
                     {"empirical", empirical_moment(dist, r, cfg.rescale)}};
            if (density) row["limit"] = density_moment(*density, r);
            rows.push_back(row);
        }
        payload << json{{"t", cfg.t}, {"rescale", cfg.rescale}, {"moments", rows}}
                       .dump(2)
                << '\n';
    } else {
        payload << (density ? "r,empirical,limit\n" : "r,empirical\n");
        for (int r = 1; r <= cfg.r_max; ++r) {
            payload << r << ',' << format_shortest(empirical_moment(dist, r, cfg.rescale));
            if (density) payload << ',' << format_shortest(density_moment(*density, r));
            payload << '\n';
        }
    }
    emit(cfg, payload.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyResult result;
    if (cfg.check == "case1-reduction") {
        result = verify_case1_reduction();
    } else if (cfg.check == "theorem3-equiv") {
        result = verify_theorem3_equivalence();
    } else if (cfg.check == "spectral") {
        result = verify_spectral();
    } else if (cfg.check == "convergence") {
        RunConfig filled = cfg;
        if (filled.schedule.is_null() || filled.schedule.empty()) {
            filled.schedule = json{{"kind", "two-period"},
                                   {"theta0", std::numbers::pi / 4.0},
                                   {"theta1", std::numbers::pi / 6.0}};
        }
        if (filled.density_kind.empty()) filled.density_kind = "theorem1";
        if (filled.t_list.empty()) filled.t_list = {100, 200, 500};
        // The theorem1 density has to describe the schedule under test.
        if (filled.density_kind == "theorem1" &&
            filled.schedule.value("kind", "") == "two-period" &&
            filled.schedule.contains("theta0")) {
            filled.theta0 = filled.schedule["theta0"].get<double>();
            filled.theta1 = filled.schedule["theta1"].get<double>();
        }

        CoinSchedule schedule = schedule_from_json(filled.schedule);
        LimitDensity density = density_from_config(filled);
        ConvergenceOptions options;
        options.ks_threshold = filled.ks_threshold;
        options.trend_slack = filled.trend_slack;
        options.schedule_json = filled.schedule.dump();
        options.density_json = density_to_json(density).dump();
        ConvergenceReport report = convergence_report(
            schedule, density, filled.t_list, filled.alpha, filled.beta, options);
        result.pass = report.pass;
        result.report_json = report.to_json().dump();
    } else {
        // Unknown checks are usage errors, not verification failures.
        std::cerr << "check: unknown check `" << cfg.check
                  << "` (expected case1-reduction|theorem3-equiv|spectral|"
                     "convergence)\n";
        return kExitUsage;
    }

    std::cout << json::parse(result.report_json).dump(2) << '\n';
    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out);
        if (file) file << result.report_json << '\n';
    }
    return result.pass ? kExitOk : kExitFailure;
}

void add_common_flags(CLI::App* sub, FlagValues& flags) {
    sub->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", flags.out, "Output path (default: stdout)");
    sub->add_option("--config", flags.config_path,
                    "JSON config file; explicit flags override its values");
    sub->add_option("--alpha", flags.alpha, "Initial up amplitude `re,im`");
    sub->add_option("--beta", flags.beta, "Initial down amplitude `re,im`");
}

void add_schedule_flags(CLI::App* sub, FlagValues& flags) {
    sub->add_option("--schedule", flags.schedule_kind,
                    "Schedule kind: one-period|two-period|n-period|case1|case2");
    sub->add_option("--theta", flags.theta, "Coin angle (one-period)");
    sub->add_option("--theta0", flags.theta0, "First coin angle");
    sub->add_option("--theta1", flags.theta1, "Second coin angle");
    sub->add_option("--thetas", flags.thetas,
                    "Comma-separated coin angles (n-period)");
    sub->add_option("--coin-a", flags.coin_a, "Coin entry a as `re,im`");
    sub->add_option("--coin-b", flags.coin_b, "Coin entry b as `re,im`");
    sub->add_option("--coin-c", flags.coin_c, "Coin entry c as `re,im`");
    sub->add_option("--coin-d", flags.coin_d, "Coin entry d as `re,im`");
    sub->add_option("--w0", flags.w0, "Initial phase w0 (case1/case2)");
    sub->add_option("--kappa", flags.kappa, "Phase increment kappa (case1/case2)");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Time-dependent coined quantum walks on the integer lattice: "
                 "simulation, closed-form limit densities, and convergence "
                 "verification"};
    app.require_subcommand(1);

    FlagValues flags;

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Evolve a walk and write its position distribution");
    add_schedule_flags(simulate, flags);
    add_common_flags(simulate, flags);
    simulate->add_option("--t", flags.t, "Number of steps");

    CLI::App* density = app.add_subcommand(
        "density", "Sample a closed-form limit density on a uniform grid");
    add_common_flags(density, flags);
    density->add_option("--density", flags.density_kind,
                        "konno|theorem1|theorem2|theorem3");
    density->add_option("--a-mod", flags.a_mod, "Scale |a| for konno");
    density->add_option("--theta0", flags.theta0, "First coin angle (theorem1)");
    density->add_option("--theta1", flags.theta1, "Second coin angle (theorem1)");
    density->add_option("--coin-a", flags.coin_a, "Base coin entry a (theorem2/3)");
    density->add_option("--coin-b", flags.coin_b, "Base coin entry b (theorem2/3)");
    density->add_option("--w0", flags.w0, "Phase seed w0 (theorem2/3)");
    density->add_option("--grid-points", flags.grid_points, "Grid size");

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Dispersion relation of the two-period symbol");
    add_common_flags(spectrum, flags);
    spectrum->add_option("--theta0", flags.theta0, "First coin angle");
    spectrum->add_option("--theta1", flags.theta1, "Second coin angle");
    spectrum->add_option("--k-points", flags.k_points, "Wavenumber grid size");

    CLI::App* moments = app.add_subcommand(
        "moments", "Empirical moments of a simulated walk, optionally next to "
                   "the limit-density moments");
    add_schedule_flags(moments, flags);
    add_common_flags(moments, flags);
    moments->add_option("--t", flags.t, "Number of steps");
    moments->add_option("--r-max", flags.r_max, "Highest moment order");
    moments->add_flag("--no-rescale", flags.no_rescale,
                      "Report raw moments instead of X/t moments");
    moments->add_option("--density", flags.density_kind,
                        "Add a limit column: konno|theorem1|theorem2|theorem3");
    moments->add_option("--a-mod", flags.a_mod, "Scale |a| for konno");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run a named verification suite and print a JSON report");
    add_schedule_flags(verify, flags);
    add_common_flags(verify, flags);
    verify->add_option("--check", flags.check,
                       "case1-reduction|theorem3-equiv|spectral|convergence")
        ->required();
    verify->add_option("--t-list", flags.t_list,
                       "Comma-separated times for the convergence check");
    verify->add_option("--density", flags.density_kind,
                       "Density for the convergence check");
    verify->add_option("--a-mod", flags.a_mod, "Scale |a| for konno");
    verify->add_option("--ks-threshold", flags.ks_threshold,
                       "Pass threshold for the final KS distance");
    verify->add_option("--slack", flags.trend_slack,
                       "Allowed per-step KS increase in the trend check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    RunConfig cfg;
    try {
        cfg = merge_config(*sub, flags, sub->get_name());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cfg.subcommand == "simulate") return cmd_simulate(cfg);
        if (cfg.subcommand == "density") return cmd_density(cfg);
        if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg);
        if (cfg.subcommand == "moments") return cmd_moments(cfg);
        if (cfg.subcommand == "verify") return cmd_verify(cfg);
    } catch (const NormalizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DegenerateCoinError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EqualAngleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ZeroEntryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnitarityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    std::cerr << "error: unknown subcommand\n";
    return kExitUsage;
}

}  // namespace qwalk::cli
