#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spancat/direct_sums.hpp"
#include "spancat/report.hpp"
#include "spancat/span.hpp"

#include <json.hpp>

namespace spancat {

/// Raised for unparseable or ill-typed instance files (CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A user-supplied witness to re-validate: the checker named by `check`
/// is run with `table` in place of its computed witness.
struct WitnessClaim {
  std::string check;  // separable | frobenius | beck | comonadic
  std::string set;    // for separable / frobenius
  std::string span;   // for comonadic, or the first beck leg
  std::string span_b; // the second beck leg
  std::vector<int> table;
};

/// Named desk-scale data loaded from a JSON file.
struct Instance {
  std::map<std::string, FiniteSet> sets;
  std::map<std::string, FiniteFunction> functions;
  std::map<std::string, Span> spans;
  std::map<std::string, SpanMatrix> matrices;
  std::vector<WitnessClaim> witnesses;
};

Instance parse_instance(const nlohmann::json& j);
Instance load_instance(const std::string& path);

nlohmann::json report_entry_to_json(const AxiomReport& r);

/// A suite run: reports sorted by subject for reproducible output.
struct SuiteReport {
  std::string suite;
  int bound = 0;
  std::vector<AxiomReport> results;

  bool all_hold() const;
};

nlohmann::json report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

}  // namespace spancat
