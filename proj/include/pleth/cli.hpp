#pragma once

#include <iosfwd>

namespace pleth::cli {

/// Exit codes: 0 success, 2 parse/format error, 3 precondition violation,
/// 4 invariant failure. Results go to out (or the --output file), messages
/// to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pleth::cli
