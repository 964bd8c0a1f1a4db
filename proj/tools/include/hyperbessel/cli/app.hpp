#pragma once

#include <ostream>

namespace hyperbessel::cli {

// Parses argv and runs the selected subcommand. Returns the process exit
// code: 0 success, 2 argument error, 3 domain violation, 4 consistency
// failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperbessel::cli
