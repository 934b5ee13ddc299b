#pragma once

#include "mgsim/engine.hpp"

#include <iosfwd>
#include <string>

namespace mgsim {

/// Parses the sectioned scenario format ([engine], [secondary],
/// [converter.k], [feeder.k], [load], [schedule]) and returns a validated
/// Scenario. Unknown sections or keys are rejected; omitted keys fall back
/// to the documented defaults. Errors throw std::invalid_argument with the
/// offending line or field.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(std::istream& in, const std::string& origin = "<stream>");

/// Writes a scenario back out in the same format with full precision, such
/// that load_scenario(save_scenario(s)) reproduces s field by field.
void save_scenario(const Scenario& scenario, std::ostream& out);
std::string scenario_to_string(const Scenario& scenario);

} // namespace mgsim
