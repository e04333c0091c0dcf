#pragma once

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "entropic/cli/format.hpp"
#include "entropic/errors.hpp"

namespace entropic::cli {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string relation;  // how measured compares to tolerance when passing: "<=" or ">="
  std::string detail;
};

inline nlohmann::ordered_json to_json(const CheckResult& r) {
  return {{"id", r.id},           {"check", r.name},          {"verdict", r.passed ? "pass" : "fail"},
          {"measured", r.measured}, {"relation", r.relation}, {"tolerance", r.tolerance},
          {"detail", r.detail}};
}

struct Report {
  std::string text;
  nlohmann::ordered_json json;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

// Text table + JSON with a fixed column order: id, check, verdict, measured, relation, tolerance, detail.
inline Report emit_report(const std::vector<CheckResult>& records) {
  detail::require(!records.empty(), "emit_report: need at least one record");
  Report rep;
  std::size_t width = 5;
  for (const auto& r : records) width = std::max(width, r.name.size());

  char line[512];
  std::snprintf(line, sizeof line, "%-4s %-*s %-7s %-24s %-3s %-24s\n", "id", int(width), "check", "verdict",
                "measured", "", "tolerance");
  rep.text += line;
  rep.json["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    (r.passed ? rep.passed : rep.failed)++;
    std::snprintf(line, sizeof line, "%-4d %-*s %-7s %-24s %-3s %-24s\n", r.id, int(width), r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", format_double(r.measured).c_str(), r.relation.c_str(),
                  format_double(r.tolerance).c_str());
    rep.text += line;
    rep.json["rows"].push_back(to_json(r));
  }
  rep.text += std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) + " failed\n";
  rep.json["passed"] = rep.passed;
  rep.json["failed"] = rep.failed;
  return rep;
}

}  // namespace entropic::cli
