#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cover {

/// Command-line dispatch.  Exit code 0 on success, 1 on domain or resource
/// errors (structured error JSON on stdout), 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cover
