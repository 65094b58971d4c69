// cli.hpp — command-line surface: argument parsing, subcommand dispatch,
// json/csv/text rendering, and exit-code mapping.
#pragma once

#include <iosfwd>

namespace lopt {

// Runs one subcommand. Results go to `out`, error reports to `err`.
// Exit codes: 0 success, 2 input/validation failure, 3 computation failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lopt
