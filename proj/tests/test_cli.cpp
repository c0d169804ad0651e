#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/cli.hpp"
#include "qwalk/io.hpp"

using nlohmann::json;
using qwalk::cli::RunConfig;
using qwalk::cli::run_cli;

namespace {

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"qwalk"};
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

struct TempFile {
    explicit TempFile(std::string name) : path(std::move(name)) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

}  // namespace

TEST_CASE("simulate writes the headline distribution as CSV") {
    TempFile file("cli_sim.csv");
    int code = run({"simulate", "--schedule", "two-period",
                    "--theta0", "0.7853981633974483",
                    "--theta1", "0.5235987755982988",
                    "--alpha", "0.7071067811865476,0",
                    "--beta", "0,0.7071067811865476",
                    "--t", "500", "--format", "csv", "--out", file.path});
    CHECK(code == 0);

    std::vector<std::string> lines = read_lines(file.path);
    REQUIRE(lines.size() == 502);  // header + 501 parity sites
    CHECK(lines[0] == "position,probability");
    double total = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        total += std::stod(lines[i].substr(comma + 1));
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("simulate at t = 0 emits the single-site distribution") {
    TempFile file("cli_sim_t0.csv");
    int code = run({"simulate", "--schedule", "one-period", "--theta",
                    "0.7853981633974483", "--t", "0", "--alpha", "1,0",
                    "--beta", "0,0", "--out", file.path});
    CHECK(code == 0);
    std::vector<std::string> lines = read_lines(file.path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "0,1");
}

TEST_CASE("simulate rejects a degenerate angle with exit code 2") {
    CHECK(run({"simulate", "--schedule", "two-period", "--theta0",
               "1.5707963267948966", "--theta1", "0.5"}) == 2);
}

TEST_CASE("simulate emits JSON with a total field") {
    TempFile file("cli_sim.json");
    int code = run({"simulate", "--schedule", "one-period", "--theta",
                    "0.7853981633974483", "--t", "10", "--format", "json",
                    "--out", file.path});
    CHECK(code == 0);
    std::ifstream in(file.path);
    json parsed = json::parse(in);
    CHECK(parsed["time"] == 10);
    CHECK(parsed["entries"].size() == 11);
    CHECK(std::abs(parsed["total"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("density grid is centered and hits 1/pi at the origin") {
    TempFile file("cli_density.csv");
    int code = run({"density", "--density", "theorem1",
                    "--theta0", "0.7853981633974483",
                    "--theta1", "0.5235987755982988", "--out", file.path});
    CHECK(code == 0);
    std::vector<std::string> lines = read_lines(file.path);
    REQUIRE(lines.size() == 1002);
    CHECK(lines[0] == "x,f");
    // 1001 symmetric grid points put x = 0 on row 501.
    std::string center = lines[501];
    std::size_t comma = center.find(',');
    CHECK(std::abs(std::stod(center.substr(0, comma))) < 1e-12);
    CHECK(std::stod(center.substr(comma + 1)) ==
          doctest::Approx(1.0 / 3.141592653589793).epsilon(1e-10));
}

TEST_CASE("theorem2 and theorem3 coincide at w0 = 0") {
    TempFile f2("cli_density_t2.csv");
    TempFile f3("cli_density_t3.csv");
    std::vector<std::string> common{
        "--coin-a", "0.7071067811865476,0", "--coin-b", "0,0.7071067811865476",
        "--w0", "0", "--alpha", "0.6,0", "--beta", "0,0.8"};
    std::vector<std::string> args2{"density", "--density", "theorem2",
                                   "--out", f2.path};
    std::vector<std::string> args3{"density", "--density", "theorem3",
                                   "--out", f3.path};
    args2.insert(args2.end(), common.begin(), common.end());
    args3.insert(args3.end(), common.begin(), common.end());
    CHECK(run(args2) == 0);
    CHECK(run(args3) == 0);

    std::ifstream in2(f2.path), in3(f3.path);
    std::stringstream buf2, buf3;
    buf2 << in2.rdbuf();
    buf3 << in3.rdbuf();
    CHECK(buf2.str() == buf3.str());
    CHECK(!buf2.str().empty());
}

TEST_CASE("density with equal angles exits with a usage error") {
    CHECK(run({"density", "--density", "theorem1", "--theta0", "0.5",
               "--theta1", "0.5"}) == 2);
}

TEST_CASE("spectrum emits unit-circle eigenvalues") {
    TempFile file("cli_spectrum.csv");
    int code = run({"spectrum", "--theta0", "0.7853981633974483", "--theta1",
                    "0.5235987755982988", "--k-points", "64", "--out", file.path});
    CHECK(code == 0);
    std::vector<std::string> lines = read_lines(file.path);
    REQUIRE(lines.size() == 65);
    CHECK(lines[0] == "k,re_lambda0,im_lambda0,re_lambda1,im_lambda1,h0,h1");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::stringstream row(lines[i]);
        std::string cell;
        std::vector<double> values;
        while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
        REQUIRE(values.size() == 7);
        double mod0 = std::hypot(values[1], values[2]);
        CHECK(std::abs(mod0 - 1.0) < 1e-12);
        CHECK(values[5] == doctest::Approx(-values[6]).epsilon(1e-12));
    }
}

TEST_CASE("moments compares empirical and limit columns") {
    TempFile file("cli_moments.csv");
    int code = run({"moments", "--schedule", "two-period",
                    "--theta0", "0.7853981633974483",
                    "--theta1", "0.5235987755982988", "--t", "200",
                    "--r-max", "2", "--density", "theorem1", "--out", file.path});
    CHECK(code == 0);
    std::vector<std::string> lines = read_lines(file.path);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "r,empirical,limit");
    // Row for r = 2: empirical close to the limit at t = 200.
    std::stringstream row(lines[2]);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
    REQUIRE(values.size() == 3);
    CHECK(std::abs(values[1] - values[2]) < 0.05);
}

TEST_CASE("verify case1-reduction passes") {
    TempFile file("cli_verify.json");
    int code = run({"verify", "--check", "case1-reduction", "--out", file.path});
    CHECK(code == 0);
    std::ifstream in(file.path);
    json report = json::parse(in);
    CHECK(report["pass"].get<bool>());
    CHECK(report["worst_error"].get<double>() < 1e-12);
}

TEST_CASE("verify convergence with the default configuration passes") {
    CHECK(run({"verify", "--check", "convergence", "--t-list", "100,200,500"}) ==
          0);
}

TEST_CASE("verify with an unknown check is a usage error") {
    CHECK(run({"verify", "--check", "does-not-exist"}) == 2);
}

TEST_CASE("verify against a deliberately wrong density fails with exit 1") {
    CHECK(run({"verify", "--check", "convergence", "--density", "konno",
               "--a-mod", "0.9", "--t-list", "100,200"}) == 1);
}

TEST_CASE("unknown subcommands and flags are usage errors") {
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"simulate", "--no-such-flag"}) == 2);
}

TEST_CASE("config file supplies defaults that flags override") {
    TempFile config("cli_config.json");
    {
        std::ofstream out(config.path);
        out << R"({"schedule":{"kind":"two-period","theta0":0.7853981633974483,)"
            << R"("theta1":0.5235987755982988},"t":3,"format":"csv"})";
    }
    TempFile result("cli_config_out.csv");
    int code = run({"simulate", "--config", config.path, "--t", "4",
                    "--out", result.path});
    CHECK(code == 0);
    std::vector<std::string> lines = read_lines(result.path);
    CHECK(lines.size() == 6);  // header + 5 sites: flag t=4 beat config t=3
}

TEST_CASE("RunConfig round-trips through JSON") {
    RunConfig cfg;
    cfg.subcommand = "simulate";
    cfg.schedule = json{{"kind", "case2"},
                        {"coin", {{"a", {0.6, 0.0}}, {"b", {0.0, 0.8}},
                                  {"c", {0.8, 0.0}}, {"d", {0.0, -0.6}}}},
                        {"w0", 0.25},
                        {"kappa", 1.75}};
    cfg.alpha = {0.28, -0.96};
    cfg.beta = {0.0, 0.0};
    cfg.t = 137;
    cfg.t_list = {10, 20, 40};
    cfg.format = "json";
    cfg.out = "somewhere.csv";
    cfg.density_kind = "theorem3";
    cfg.a_mod = 0.123456789012345;
    cfg.theta0 = 1.0471975511965976;
    cfg.theta1 = 0.6154797086703873;
    cfg.coin_a = {0.1, 0.2};
    cfg.coin_b = {0.3, -0.4};
    cfg.w0 = -2.5;
    cfg.grid_points = 513;
    cfg.k_points = 257;
    cfg.r_max = 6;
    cfg.rescale = false;
    cfg.check = "spectral";
    cfg.ks_threshold = 0.04;
    cfg.trend_slack = 0.02;

    RunConfig restored = RunConfig::from_json(cfg.to_json());
    CHECK(restored.to_json() == cfg.to_json());
    CHECK(restored.alpha == cfg.alpha);
    CHECK(restored.t_list == cfg.t_list);
    CHECK(restored.a_mod == cfg.a_mod);
    CHECK(restored.rescale == cfg.rescale);
}
