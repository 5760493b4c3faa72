#pragma once

// Exact solvers for the optimization version of number partitioning:
// minimize |sum_{i in S} c_i - sum_{i not in S} c_i|.
//
// Tie rule shared by the enumerating solvers: among optimal vectors with
// first entry +1 on the sorted instance, the smallest bitmask wins. A
// partition {S, [n]\S} has exactly one such representative, and
// |delta(S)| = |delta([n]\S)|, so this loses nothing.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partposet/core.hpp"

namespace partposet {

struct Solution {
  SubsetRef subset{0, {}};  // original 1-based input positions
  std::int64_t delta = 0;   // sum inside subset minus sum outside
  std::int64_t abs_delta = 0;
  std::string algorithm;
  /// Work measure, algorithm specific: vectors scanned (brute, qenum),
  /// DP cells (dp), start nodes plus expanded nodes (pruned), elements
  /// tested (minfast, corollary).
  std::uint64_t nodes_visited = 0;
  bool optimal = true;
};

inline constexpr int kBruteLimit = 24;
inline constexpr std::int64_t kDpCellLimit = 100'000'000;

Solution solve_brute(const Instance& inst);
Solution solve_dp(const Instance& inst);
/// Scans one representative per +-pair of Q(n). Throws TooSmall for n < 3.
Solution solve_q_enum(const Instance& inst);
/// Ascent over the Q cover diagram from the minimal elements, stopping at
/// every node with delta >= 0.
Solution solve_pruned(const Instance& inst);
/// First minimal element -m_k (ascending k) with delta >= 0, if any.
std::optional<Solution> solve_min_fastpath(const Instance& inst);
/// First m_k satisfying the three corollary inequalities, if any.
std::optional<Solution> solve_corollary(const Instance& inst);

/// One of brute, dp, qenum, pruned, minfast, corollary, auto. Throws
/// UnknownAlgorithm; minfast/corollary throw InvalidArgument when they do
/// not apply to the instance. "qenum" with n < 3 falls back to brute.
Solution solve(const Instance& inst, std::string_view algorithm);
std::vector<std::string> algorithm_names();

/// reachable[s] iff some subset of c sums to s, s in [0, sum c].
std::vector<bool> subset_sums_reachable(std::span<const std::int64_t> c);

}  // namespace partposet
