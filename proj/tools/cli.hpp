#pragma once

#include <iosfwd>

namespace sp4cert::cli {

/// Exit codes: 0 success; 1 mathematical failure such as a non-member or a
/// rejected certificate; 2 when the command line or an input file is unusable.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one sp4cert command line. `in` backs any "-" input path.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sp4cert::cli
