#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hvb::cli {

/// Runs one command. args excludes the program name, e.g.
/// {"bracket", "--algebra", "twisted-hv", "L[2]", "L[-2]"}.
/// Returns 0 on PASS/Solvable, 1 on FAIL/Infeasible, 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hvb::cli
