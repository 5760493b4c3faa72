#pragma once

// Library side of the `partposet` command-line tool, kept separate from
// main() so tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "partposet/hasse.hpp"

namespace partposet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Whitespace-separated nonnegative decimal integers; lines whose first
/// non-blank character is '#' are skipped. Throws ParseError, NegativeValue,
/// Overflow or EmptyInput.
std::vector<std::int64_t> parse_instance_text(std::string_view text);

/// DOT digraph with sign-string node ids, one same-rank group per rank
/// (left to right), and one edge per cover from covered to covering.
std::string hasse_to_dot(const HasseDag& dag);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partposet::cli
