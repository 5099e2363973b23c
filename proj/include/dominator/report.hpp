#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dominator/bounds.hpp"
#include "dominator/exact.hpp"
#include "dominator/lll.hpp"
#include "dominator/turan.hpp"

// TSV and JSON renderings shared by the CLI and the tests. JSON documents
// carry "schema": "dominator/1".

namespace dominator::report {

inline constexpr const char* kSchema = "dominator/1";
inline constexpr int kConditionDigits = 20;

inline nlohmann::json envelope(std::string_view kind) {
  return nlohmann::json{{"schema", kSchema}, {"kind", kind}};
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline nlohmann::json to_json(const LllReport& r) {
  nlohmann::json j{{"delta", r.params.delta}, {"Delta", r.params.Delta}, {"a", r.params.a}, {"b", r.params.b}};
  if (r.minimal_colors) {
    j["minimal_N"] = *r.minimal_colors;
    j["bound_num"] = numerator(*r.bound).str();
    j["bound_den"] = denominator(*r.bound).str();
    j["P_num"] = numerator(r.probability).str();
    j["P_den"] = denominator(r.probability).str();
    j["condition_value_decimal"] = to_decimal(r.condition_value, kConditionDigits);
  } else {
    j["minimal_N"] = nullptr;
  }
  return j;
}

inline const char* kLllHeader = "delta\tDelta\ta\tb\tminimal_N\tbound_num\tbound_den\tP_num\tP_den\tcondition_value_decimal";

inline std::string to_tsv_row(const LllReport& r) {
  std::ostringstream out;
  out << r.params.delta << '\t' << r.params.Delta << '\t' << r.params.a << '\t' << r.params.b << '\t';
  if (r.minimal_colors) {
    out << *r.minimal_colors << '\t' << numerator(*r.bound) << '\t' << denominator(*r.bound) << '\t'
        << numerator(r.probability) << '\t' << denominator(r.probability) << '\t'
        << to_decimal(r.condition_value, kConditionDigits);
  } else {
    out << "NA\tNA\tNA\tNA\tNA\tNA";
  }
  return out.str();
}

inline std::string lll_table_tsv(const std::vector<LllReport>& rows) {
  std::string out = std::string(kLllHeader) + "\n";
  for (const auto& r : rows) out += to_tsv_row(r) + "\n";
  return out;
}

inline nlohmann::json lll_table_json(const std::vector<LllReport>& rows) {
  auto j = envelope("lll-table");
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(to_json(r));
  return j;
}

inline nlohmann::json to_json(const DominationCertificate& c) {
  nlohmann::json j{{"a", c.a},         {"b", c.b},     {"size", c.set.size()},
                   {"set", c.set},     {"verified", c.verified}, {"method", to_string(c.method)}};
  if (c.claimed_bound) {
    j["claimed_bound"] = to_fraction(*c.claimed_bound);
  } else {
    j["claimed_bound"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j{{"method", to_string(r.method)}, {"applicable", r.applicable}, {"reason", r.reason}};
  if (r.value) {
    j["value"] = *r.value;
    j["value_decimal"] = format_double(*r.value);
  } else {
    j["value"] = nullptr;
  }
  if (r.fraction) {
    j["bound_num"] = numerator(*r.fraction).str();
    j["bound_den"] = denominator(*r.fraction).str();
  }
  j["integral"] = r.integral;
  j["vacuous"] = r.vacuous;
  j["parameters"] = r.parameters;
  return j;
}

inline const char* kBoundsHeader = "method\tdelta\tDelta\ta\tb\tapplicable\tvalue\tbound_num\tbound_den\tvacuous\tdetail";

inline std::string bounds_tsv(const std::vector<BoundReport>& rows, const DegreeProfile& profile, int a, int b) {
  std::ostringstream out;
  out << kBoundsHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.method) << '\t' << profile.min_degree << '\t' << profile.max_degree << '\t' << a << '\t' << b
        << '\t' << (r.applicable ? "yes" : "no") << '\t' << (r.value ? format_double(*r.value) : "NA") << '\t'
        << (r.fraction ? numerator(*r.fraction).str() : "NA") << '\t'
        << (r.fraction ? denominator(*r.fraction).str() : "NA") << '\t' << (r.vacuous ? "vacuous" : "") << '\t';
    std::string detail;
    for (const auto& [key, value] : r.parameters) detail += key + "=" + value + ";";
    if (!r.reason.empty()) detail += r.reason;
    out << detail << '\n';
  }
  return out.str();
}

}  // namespace dominator::report
