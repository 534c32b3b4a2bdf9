#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace flipcalc::script {

/// .sod scripts work with ledgers and rules; .mot scripts with motives.
enum class Kind { Sod, Motive };

/// Picks the kind from the file extension. Throws DomainError otherwise.
Kind kind_for_path(const std::string& path);

struct Outcome {
  std::size_t line;
  std::string statement;
  std::string expected;
  std::string computed;
  bool pass;
};

struct Result {
  std::vector<Outcome> checks;
  bool pass() const;
};

/// Runs every statement in order. Syntax errors raise dsl::ParseError;
/// evaluation errors raise flipcalc::Error.
Result run(std::string_view text, Kind kind);
Result run_file(const std::string& path);

/// One line per check: "PASS line 4: expect ... (computed ...)".
std::string render(const Result& result);

}  // namespace flipcalc::script
