#pragma once

#include "flipcalc/hodge.hpp"

#include <string>
#include <vector>

namespace flipcalc::builtins {

/// Names of the embedded diamonds, sorted. "curve:G" is also accepted for
/// any genus G >= 0 but is not listed.
std::vector<std::string> names();

/// The embedded JSON text for a listed name.
const std::string& source(const std::string& name);

/// Parses and validates the named diamond. Throws DomainError if unknown.
hodge::HodgeDiamond diamond(const std::string& name);

}  // namespace flipcalc::builtins
