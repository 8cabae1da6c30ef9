#pragma once

#include <iosfwd>

namespace dcycles::cli {

/// Runs one command line. Exit codes: 0 success / found / pass,
/// 1 definite negative answer, 2 usage or input error, 3 precondition unmet,
/// 4 search or resource budget exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcycles::cli
