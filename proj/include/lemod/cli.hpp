#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lemod/le_module.hpp"

namespace lemod {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Element lookup used by --element: exact display name, then the aliases
/// 0_M and e, then "<d>" for "⟨d⟩", then a decimal index. A name that also
/// reads as a different index wins, with a warning on `err`. Throws
/// UsageError when nothing matches.
int resolve_element(const LeModule& m, const std::string& token, std::ostream& err);

}  // namespace lemod
