// Command dispatch for the engine. Kept in the library so the command surface
// is testable in-process; the binary in tools/ is a thin wrapper.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parind {

// Exit status: 0 success, 1 domain/validation error, 2 syntax/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parind
