#pragma once

#include "absrr/divisor.hpp"
#include "absrr/h0.hpp"
#include "absrr/h1.hpp"
#include "absrr/rr.hpp"
#include "absrr/tolerance.hpp"

#include <json.hpp>

#include <string>

namespace absrr {

/// Divisor as {"finite": {"2": -2}, "lambda": "p/q"}.
nlohmann::json divisor_to_json(const ArakelovDivisor& d);
ArakelovDivisor divisor_from_json(const nlohmann::json& j);

nlohmann::json genset_report_to_json(const GenSetReport& r);
nlohmann::json circle_genset_to_json(const CircleGenSet& g, bool verified);
nlohmann::json rr_report_to_json(const RRReport& r);
nlohmann::json serre_report_to_json(const SerreReport& r);

/// Column order shared by the CSV export and the JSON report fields.
std::string rr_csv_header();
std::string rr_report_to_csv(const RRReport& r);

/// Tolerance module description:
///   {"group": {"moduli": [12]} | {"interval": 5},
///    "mass": "zero" | "abs" | {"table": {"elem": "p/q" | "inf", ...}},
///    "mass_bound": "p/q" | "inf",
///    "cost": "diagonal" | {"circle": q} | {"table": {...}},
///    "tol": "p/q"}
/// Table keys are comma-separated coordinates of the normalized element.
FiniteToleranceModule module_from_json(const nlohmann::json& j);

}  // namespace absrr
