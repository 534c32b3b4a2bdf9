#pragma once

#include "flipcalc/hodge.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace flipcalc::golden {

/// One named check. pass is exactly expected == computed.
struct CheckReport {
  std::string name;
  int criterion = 0;
  std::string inputs;
  std::string expected;
  std::string computed;
  bool pass = false;
  /// "reference" (a published value), "derived" or "trivial".
  std::string provenance;
};

struct Criterion {
  int id;
  std::string title;
  /// Wall-clock ceiling in seconds.
  double time_limit;
};

/// The ten acceptance criteria, in order.
const std::vector<Criterion>& criteria();

/// Builtin diamonds, with optional replacements for fault injection.
struct Catalog {
  std::map<std::string, hodge::HodgeDiamond> overrides;
  hodge::HodgeDiamond get(const std::string& name) const;
};

std::vector<CheckReport> run_criterion(int id, const Catalog& catalog = {});
std::vector<CheckReport> run_golden_suite(const Catalog& catalog = {});

nlohmann::json to_json(const CheckReport& report);

}  // namespace flipcalc::golden
