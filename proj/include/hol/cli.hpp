#pragma once

#include <iosfwd>

namespace hol::cli {

/// Runs one subcommand. Exit codes: 0 success, 1 a report with failures,
/// 2 usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hol::cli
