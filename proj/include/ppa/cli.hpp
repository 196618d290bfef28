#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppa::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2 };

/// Entry point of the `ppa` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppa::cli
