#include "qwalk/io.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/numerics.hpp"

namespace qwalk {

using nlohmann::json;

std::string format_shortest(double value) {
    char buffer[32];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) break;
    }
    return buffer;
}

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
    out << "position,probability\n";
    for (const auto& [x, p] : dist.entries) {
        out << x << ',' << format_shortest(p) << '\n';
    }
}

json distribution_to_json(const Distribution& dist) {
    json entries = json::array();
    KahanSum total;
    for (const auto& [x, p] : dist.entries) {
        entries.push_back({x, p});
        total.add(p);
    }
    return json{{"time", dist.time}, {"entries", entries}, {"total", total.value()}};
}

Complex parse_complex(const std::string& text, const std::string& field) {
    std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return Complex(std::stod(text), 0.0);
        }
        return Complex(std::stod(text.substr(0, comma)),
                       std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw DomainError(field + ": expected `re,im` or a bare real, got `" +
                          text + "`");
    }
}

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, const std::string& field) {
    if (j.is_number()) {
        return Complex(j.get<double>(), 0.0);
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex(j[0].get<double>(), j[1].get<double>());
    }
    if (j.is_string()) {
        return parse_complex(j.get<std::string>(), field);
    }
    throw DomainError(field + ": expected [re, im]");
}

json coin_to_json(const CoinMatrix& coin) {
    return json{{"a", complex_to_json(coin.a())},
                {"b", complex_to_json(coin.b())},
                {"c", complex_to_json(coin.c())},
                {"d", complex_to_json(coin.d())}};
}

CoinMatrix coin_from_json(const json& j, const std::string& field) {
    if (!j.is_object()) {
        throw DomainError(field + ": expected a coin object {a, b, c, d}");
    }
    for (const char* entry : {"a", "b", "c", "d"}) {
        if (!j.contains(entry)) {
            throw DomainError(field + "." + entry + ": missing coin entry");
        }
    }
    return CoinMatrix(complex_from_json(j["a"], field + ".a"),
                      complex_from_json(j["b"], field + ".b"),
                      complex_from_json(j["c"], field + ".c"),
                      complex_from_json(j["d"], field + ".d"));
}

namespace {

double number_field(const json& j, const std::string& key, const char* descriptor) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw DomainError(std::string(descriptor) + ": missing numeric field `" +
                          key + "`");
    }
    return j[key].get<double>();
}

}  // namespace

CoinSchedule schedule_from_json(const json& descriptor) {
    if (!descriptor.is_object() || !descriptor.contains("kind")) {
        throw DomainError("schedule: descriptor must be an object with `kind`");
    }
    std::string kind = descriptor["kind"].get<std::string>();

    if (kind == "one-period") {
        if (descriptor.contains("theta")) {
            return CoinSchedule::one_period(
                orthogonal_coin(number_field(descriptor, "theta", "schedule")));
        }
        if (descriptor.contains("coin")) {
            return CoinSchedule::one_period(
                coin_from_json(descriptor["coin"], "schedule.coin"));
        }
        throw DomainError("schedule: one-period needs `theta` or `coin`");
    }
    if (kind == "two-period") {
        if (descriptor.contains("theta0") || descriptor.contains("theta1")) {
            return CoinSchedule::two_period(
                orthogonal_coin(number_field(descriptor, "theta0", "schedule")),
                orthogonal_coin(number_field(descriptor, "theta1", "schedule")));
        }
        if (descriptor.contains("coin0") && descriptor.contains("coin1")) {
            return CoinSchedule::two_period(
                coin_from_json(descriptor["coin0"], "schedule.coin0"),
                coin_from_json(descriptor["coin1"], "schedule.coin1"));
        }
        throw DomainError("schedule: two-period needs theta0/theta1 or coin0/coin1");
    }
    if (kind == "n-period") {
        std::vector<CoinMatrix> coins;
        if (descriptor.contains("thetas") && descriptor["thetas"].is_array()) {
            for (const auto& theta : descriptor["thetas"]) {
                if (!theta.is_number()) {
                    throw DomainError("schedule.thetas: entries must be numbers");
                }
                coins.push_back(orthogonal_coin(theta.get<double>()));
            }
        } else if (descriptor.contains("coins") && descriptor["coins"].is_array()) {
            for (std::size_t i = 0; i < descriptor["coins"].size(); ++i) {
                coins.push_back(coin_from_json(descriptor["coins"][i],
                                               "schedule.coins[" +
                                                   std::to_string(i) + "]"));
            }
        } else {
            throw DomainError("schedule: n-period needs `thetas` or `coins`");
        }
        return CoinSchedule::n_period(std::move(coins));
    }
    if (kind == "case1" || kind == "case2") {
        if (!descriptor.contains("coin")) {
            throw DomainError("schedule.coin: " + kind + " needs a base coin");
        }
        CoinMatrix base = coin_from_json(descriptor["coin"], "schedule.coin");
        double w0 = number_field(descriptor, "w0", "schedule");
        double kappa = number_field(descriptor, "kappa", "schedule");
        return kind == "case1" ? CoinSchedule::case1(base, w0, kappa)
                               : CoinSchedule::case2(base, w0, kappa);
    }
    throw DomainError("schedule.kind: unknown kind `" + kind + "`");
}

json density_to_json(const LimitDensity& d) {
    return json{{"scale", d.scale()},
                {"weight", d.weight_constant()},
                {"provenance", d.provenance()}};
}

}  // namespace qwalk
