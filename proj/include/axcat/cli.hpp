#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axcat {

inline constexpr int kExitForbidden = 0;
inline constexpr int kExitAllowed = 1;
inline constexpr int kExitError = 2;

// Entry point of the `axcat` tool; `args` excludes the program name.
//
//   check <file> [--axioms sc|scpl|framework] [--arch NAME] [--json]
//   enumerate <file> [--arch NAME] [--json] [--dump-executions]
//   explain <file> --outcome BINDING [--axioms ...] [--arch NAME] [--json]
//
// check and explain exit 0 when the outcome is forbidden, 1 when allowed;
// every command exits 2 on error. AXCAT_MAX_EVENTS overrides the
// enumeration cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axcat
