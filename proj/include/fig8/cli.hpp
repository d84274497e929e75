#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fig8::cli {

// Exit codes.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kUnknown = 3;
inline constexpr int kInternalError = 4;

// Runs `fig8 <args...>` (args excludes the program name). The artifact goes to
// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fig8::cli
