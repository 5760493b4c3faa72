#include "partposet/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>
#include <utility>

#include "partposet/kernels.hpp"
#include "partposet/poset.hpp"

namespace partposet {

namespace {

// Builds a Solution from a subset of sorted positions.
Solution make_solution(const Instance& inst, std::vector<int> sorted_positions, std::string algorithm,
                       std::uint64_t nodes) {
  const SubsetRef sorted(inst.size(), std::move(sorted_positions));
  std::int64_t inside = 0;
  for (int i : sorted.indices()) inside += inst.c[static_cast<std::size_t>(i - 1)];
  Solution s;
  s.subset = inst.to_original(sorted);
  s.delta = inside - (inst.total - inside);
  s.abs_delta = std::llabs(s.delta);
  s.algorithm = std::move(algorithm);
  s.nodes_visited = nodes;
  s.optimal = true;
  return s;
}

std::vector<int> mask_positions(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

void require_range(const Instance& inst, int lo, int hi, std::string_view who) {
  if (inst.size() < lo) {
    throw Error(ErrorCode::TooSmall, std::string(who) + " needs n >= " + std::to_string(lo));
  }
  if (inst.size() > hi) {
    throw Error(ErrorCode::TooLarge, std::string(who) + " is limited to n <= " + std::to_string(hi));
  }
}

Solution from_scan(const Instance& inst, kernels::ScanFilter filter, std::string name) {
  const auto r = kernels::scan_partitions(inst.c, filter);
  return make_solution(inst, mask_positions(r.mask, inst.size()), std::move(name), r.evaluated);
}

std::int64_t delta_bits(const Instance& inst, std::uint64_t mask) {
  std::int64_t d = 0;
  for (int i = 0; i < inst.size(); ++i) {
    const std::int64_t ci = inst.c[static_cast<std::size_t>(i)];
    d += ((mask >> i) & 1U) ? ci : -ci;
  }
  return d;
}

// dst |= src << shift over packed bit rows of equal length.
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::int64_t shift) {
  const auto words = static_cast<std::int64_t>(src.size());
  const std::int64_t ws = shift / 64;
  const int bs = static_cast<int>(shift % 64);
  for (std::int64_t k = words - 1; k >= ws; --k) {
    std::uint64_t v = src[static_cast<std::size_t>(k - ws)] << bs;
    if (bs != 0 && k - ws - 1 >= 0) v |= src[static_cast<std::size_t>(k - ws - 1)] >> (64 - bs);
    dst[static_cast<std::size_t>(k)] |= v;
  }
}

bool test_bit(const std::vector<std::uint64_t>& row, std::int64_t s) {
  return (row[static_cast<std::size_t>(s / 64)] >> (s % 64)) & 1U;
}

}  // namespace

std::vector<bool> subset_sums_reachable(std::span<const std::int64_t> c) {
  std::int64_t total = 0;
  for (auto x : c) {
    if (x < 0) throw Error(ErrorCode::NegativeValue, "negative weight");
    total += x;
  }
  if (total > kDpCellLimit) throw Error(ErrorCode::TooLarge, "subset-sum table too large");
  std::vector<bool> reach(static_cast<std::size_t>(total + 1), false);
  reach[0] = true;
  for (auto x : c) {
    for (std::int64_t s = total; s >= x; --s) {
      if (reach[static_cast<std::size_t>(s - x)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  return reach;
}

Solution solve_brute(const Instance& inst) {
  require_range(inst, 1, kBruteLimit, "brute");
  return from_scan(inst, kernels::ScanFilter::AllPartitions, "brute");
}

Solution solve_q_enum(const Instance& inst) {
  require_range(inst, 3, kBruteLimit, "qenum");
  return from_scan(inst, kernels::ScanFilter::QOnly, "qenum");
}

Solution solve_dp(const Instance& inst) {
  const int n = inst.size();
  if (n < 1) throw Error(ErrorCode::EmptyInput, "instance has no values");
  const std::int64_t total = inst.total;
  if (total > 0 && static_cast<std::int64_t>(n) > kDpCellLimit / total) {
    throw Error(ErrorCode::TooLarge, "dp needs n * total <= 1e8");
  }
  // rows[i]: sums reachable by subsets of sorted positions 1..i+1 that
  // contain position 1.
  const auto words = static_cast<std::size_t>(total / 64 + 1);
  std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
  rows[0][static_cast<std::size_t>(inst.c[0] / 64)] |= std::uint64_t{1} << (inst.c[0] % 64);
  for (int i = 1; i < n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    row = rows[static_cast<std::size_t>(i - 1)];
    or_shifted(row, rows[static_cast<std::size_t>(i - 1)], inst.c[static_cast<std::size_t>(i)]);
  }
  const auto& last = rows.back();

  // Greedy from the top position keeps the bitmask as small as possible.
  auto reconstruct = [&](std::int64_t s) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int i = n - 1; i >= 1; --i) {
      if (!test_bit(rows[static_cast<std::size_t>(i - 1)], s)) {
        in[static_cast<std::size_t>(i)] = true;
        s -= inst.c[static_cast<std::size_t>(i)];
      }
    }
    in[0] = true;
    return in;
  };
  auto smaller_mask = [n](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (int i = n - 1; i >= 0; --i) {
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) return !a[static_cast<std::size_t>(i)];
    }
    return false;
  };

  std::optional<std::vector<bool>> best;
  for (std::int64_t d = total % 2; d <= total && !best; d += 2) {
    for (std::int64_t s : {(total - d) / 2, (total + d) / 2}) {
      if (!test_bit(last, s)) continue;
      auto cand = reconstruct(s);
      if (!best || smaller_mask(cand, *best)) best = std::move(cand);
    }
  }
  std::vector<int> positions;
  for (int i = 0; i < n; ++i) {
    if ((*best)[static_cast<std::size_t>(i)]) positions.push_back(i + 1);
  }
  return make_solution(inst, std::move(positions), "dp",
                       static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(total + 1));
}

Solution solve_pruned(const Instance& inst) {
  require_range(inst, 3, kBruteLimit, "pruned");
  const int n = inst.size();
  const Extremes ext = extremes(n);
  std::vector<std::uint64_t> seen((std::size_t{1} << n) / 64 + 1, 0);

  // Closest-to-zero negative nodes first.
  using Entry = std::pair<std::int64_t, std::uint64_t>;
  auto later = [](const Entry& a, const Entry& b) {
    return a.first < b.first || (a.first == b.first && a.second > b.second);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> frontier(later);

  bool found = false;
  std::int64_t best_abs = 0;
  std::uint64_t best_mask = 0;
  std::uint64_t visited = 0;

  // Returns true when an exact split (delta == 0) has been found.
  auto discover = [&](std::uint64_t mask) {
    auto& word = seen[mask / 64];
    const std::uint64_t bit = std::uint64_t{1} << (mask % 64);
    if (word & bit) return false;
    word |= bit;
    const std::int64_t d = delta_bits(inst, mask);
    if (d < 0) {
      frontier.emplace(d, mask);
      return false;
    }
    // Stop node: dominates every vector above it and below its negation.
    if (!found || d < best_abs || (d == best_abs && mask < best_mask)) {
      found = true;
      best_abs = d;
      best_mask = mask;
    }
    return d == 0;
  };

  bool exact = false;
  for (const auto& v : ext.minimal) {
    ++visited;
    if (discover(v.bits())) {
      exact = true;
      break;
    }
  }
  while (!exact && !frontier.empty()) {
    const std::uint64_t mask = frontier.top().second;
    frontier.pop();
    ++visited;
    auto try_cover = [&](std::uint64_t w) {
      if (classify_bits(n, w) == PosetKind::Q && discover(w)) exact = true;
    };
    if (!((mask >> (n - 1)) & 1U)) try_cover(mask | (std::uint64_t{1} << (n - 1)));
    for (int k = 0; k + 1 < n && !exact; ++k) {
      if (!((mask >> k) & 1U) && ((mask >> (k + 1)) & 1U)) try_cover(mask ^ (std::uint64_t{3} << k));
    }
  }
  if (!found) throw std::logic_error("pruned search ended without a nonnegative node");
  return make_solution(inst, mask_positions(best_mask, n), "pruned", visited);
}

std::optional<Solution> solve_min_fastpath(const Instance& inst) {
  require_range(inst, 3, kMaxLength, "minfast");
  const Extremes ext = extremes(inst.size());
  std::uint64_t tested = 0;
  for (const auto& v : ext.minimal) {
    ++tested;
    if (delta(v, inst) >= 0) return make_solution(inst, to_subset(v).indices(), "minfast", tested);
  }
  return std::nullopt;
}

std::optional<Solution> solve_corollary(const Instance& inst) {
  require_range(inst, 3, kMaxLength, "corollary");
  const int n = inst.size();
  const Extremes ext = extremes(n);
  std::uint64_t tested = 0;
  for (int k = 0; k <= ext.ell; ++k) {
    ++tested;
    const auto& top = ext.maximal[static_cast<std::size_t>(k)];
    const auto& bottom = ext.minimal[static_cast<std::size_t>(k)];
    const std::int64_t value = delta(top, inst);
    if (value < 0) continue;
    if (k != 0 && value > delta(apply_swap(bottom, k, k + 1), inst)) continue;
    if (2 * k + 1 != n && value > delta(apply_addition(bottom, n), inst)) continue;
    return make_solution(inst, to_subset(top).indices(), "corollary", tested);
  }
  return std::nullopt;
}

std::vector<std::string> algorithm_names() { return {"brute", "dp", "qenum", "pruned", "minfast", "corollary", "auto"}; }

Solution solve(const Instance& inst, std::string_view algorithm) {
  const int n = inst.size();
  if (algorithm == "brute") return solve_brute(inst);
  if (algorithm == "dp") return solve_dp(inst);
  if (algorithm == "qenum") return n < 3 ? solve_brute(inst) : solve_q_enum(inst);
  if (algorithm == "pruned") return solve_pruned(inst);
  if (algorithm == "minfast" || algorithm == "corollary") {
    auto s = algorithm == "minfast" ? solve_min_fastpath(inst) : solve_corollary(inst);
    if (!s) throw Error(ErrorCode::InvalidArgument, std::string(algorithm) + " does not apply to this instance");
    return *s;
  }
  if (algorithm == "auto") {
    if (n >= 3 && n <= kMaxLength) {
      if (auto s = solve_min_fastpath(inst)) return *s;
      if (auto s = solve_corollary(inst)) return *s;
      if (n <= kBruteLimit) return solve_pruned(inst);
    }
    return solve_dp(inst);
  }
  throw Error(ErrorCode::UnknownAlgorithm, "unknown algorithm '" + std::string(algorithm) + "'");
}

}  // namespace partposet
