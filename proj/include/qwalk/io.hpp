#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "qwalk/density.hpp"
#include "qwalk/schedule.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Distribution serialization.
// CSV: header `position,probability`, positions ascending, one row per
// parity-consistent site. JSON: {"time": t, "entries": [[x, p], ...],
// "total": s} with s the compensated probability total.
void write_distribution_csv(std::ostream& out, const Distribution& dist);
nlohmann::json distribution_to_json(const Distribution& dist);

/// Parse "re,im" (or a bare real) into a complex number.
Complex parse_complex(const std::string& text, const std::string& field);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json coin_to_json(const CoinMatrix& coin);
CoinMatrix coin_from_json(const nlohmann::json& j, const std::string& field);

/// Materialize a schedule from its JSON descriptor. Supported kinds:
///   {"kind":"one-period","theta":x} or {"kind":"one-period","coin":{...}}
///   {"kind":"two-period","theta0":x,"theta1":y} or {...,"coin0":{},"coin1":{}}
///   {"kind":"n-period","thetas":[...]} or {"kind":"n-period","coins":[...]}
///   {"kind":"case1","coin":{...},"w0":x,"kappa":y}
///   {"kind":"case2","coin":{...},"w0":x,"kappa":y}
/// Coin objects are {"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}.
/// Errors carry the offending field name.
CoinSchedule schedule_from_json(const nlohmann::json& descriptor);

/// Descriptor for a constructed density (scale, weight, provenance).
nlohmann::json density_to_json(const LimitDensity& d);

/// Shortest decimal string that parses back to exactly this value.
std::string format_shortest(double value);

}  // namespace qwalk
