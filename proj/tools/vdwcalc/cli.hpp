#pragma once

// vdwcalc entry points, callable in-process.
//
// Exit codes: 0 success, 1 numeric failure (including failed validation
// fixtures), 2 bad input (arguments, configuration, data files).

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "output.hpp"
#include "scenario.hpp"

namespace vdwcalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitInput = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Table eps_table(const Scenario& s);
Table alpha_table(const Scenario& s);
/// One table per series value (a single unnamed table without a series).
std::vector<std::pair<std::string, Table>> c3_tables(const Scenario& s);
Table nanotube_table(const Scenario& s);

}  // namespace vdwcalc
