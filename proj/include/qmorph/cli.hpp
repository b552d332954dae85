#pragma once

#include <string>
#include <vector>

namespace qmorph {

/// Command-line entry point. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 2 on a compare mismatch, 1 otherwise.
int cli_main(const std::vector<std::string>& args);

} // namespace qmorph
