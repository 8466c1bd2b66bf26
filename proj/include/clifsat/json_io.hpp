#pragma once

#include <string>

#include "json.hpp"

#include "clifsat/clifford.hpp"
#include "clifsat/signed_sum.hpp"
#include "clifsat/truth_table.hpp"

// JSON envelopes for the exportable values. Schemas are fixed; breaking
// changes must bump the schema tag used by the CLI reports.

namespace clifsat {

inline nlohmann::json to_json(const TruthTable& t) {
  return {{"n", t.num_vars()}, {"bits_hex", t.to_hex()}};
}

inline TruthTable truth_table_from_json(const nlohmann::json& j) {
  return TruthTable::from_hex(j.at("n").get<int>(),
                              j.at("bits_hex").get<std::string>());
}

inline nlohmann::json to_json(const IntTable& t) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::uint64_t a = 0; a < t.size(); ++a) coeffs.push_back(t[a]);
  return {{"n", t.num_vars()}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const RelationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const RelationCheck& c : r.checks) {
    nlohmann::json item = {{"identity", c.identity},
                           {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) item["counterexample"] = c.counterexample;
    checks.push_back(std::move(item));
  }
  return {{"n", r.n}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

inline const char* to_string(ExitKind e) {
  switch (e) {
    case ExitKind::EmptySum: return "empty_sum";
    case ExitKind::ScalarZero: return "scalar_zero";
    case ExitKind::ScalarNonzero: return "scalar_nonzero";
    case ExitKind::SatTermFound: return "sat_term_found";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  return v == Verdict::Sat ? "SAT" : "UNSAT";
}

inline nlohmann::json to_json(const SolveTrace& t) {
  nlohmann::json levels = nlohmann::json::array();
  for (const TraceLevel& l : t.levels) {
    nlohmann::json level = {{"terms_before_simplify", l.terms_before},
                            {"terms_after_simplify", l.terms_after}};
    if (l.var != 0) level["eliminated_var"] = l.var;  // absent on the exit level
    levels.push_back(std::move(level));
  }
  nlohmann::json out = {{"levels", levels}, {"exit", to_string(t.exit)}};
  if (t.exit == ExitKind::ScalarZero || t.exit == ExitKind::ScalarNonzero)
    out["scalar"] = t.scalar;
  return out;
}

}  // namespace clifsat
