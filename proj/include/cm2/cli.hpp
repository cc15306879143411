#pragma once

#include <iosfwd>

namespace cm2::cli {

/// Runs one subcommand and writes the result to `out` (diagnostics to
/// `err`). Exit codes: 0 success / affirmative verdict, 1 usage error,
/// 2 domain error, 3 negative verdict of a check command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cm2::cli
