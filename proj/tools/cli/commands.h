#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mld::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidOrdering = 2;
inline constexpr int kNegativeEntropy = 3;
inline constexpr int kRegimeMismatch = 4;
inline constexpr int kLengthMismatch = 5;
inline constexpr int kBadDistortion = 6;

// Runs one command line (without the program name). Paths given as "-" read
// from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mld::cli
