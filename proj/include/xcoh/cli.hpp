#pragma once

#include <string>
#include <vector>

namespace xcoh {

/// Entry point behind the `xcoh` binary. Exit codes: 0 on success, 1 when
/// `verify` finds a failing claim, 2 on usage or I/O errors.
int run_cli(int argc, const char* const* argv);

/// Same, for in-process use; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace xcoh
