#include "partposet/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#ifdef PARTPOSET_HAVE_OPENMP
#include <omp.h>
#endif

namespace partposet::kernels {

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (test(i, j)) t.set(j, i);
    }
  }
  return t;
}

int max_threads() {
#ifdef PARTPOSET_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Subset sums of the low and high halves of c, so that the sum selected by
// mask is lo[mask & lo_mask] + hi[mask >> lo_bits].
struct HalfSums {
  int lo_bits = 0;
  std::uint64_t lo_mask = 0;
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  std::int64_t operator()(std::uint64_t mask) const noexcept {
    return lo[mask & lo_mask] + hi[mask >> lo_bits];
  }
};

std::vector<std::int64_t> subset_sums(std::span<const std::int64_t> c) {
  std::vector<std::int64_t> sums(std::size_t{1} << c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) sums[half + m] = sums[m] + c[i];
  }
  return sums;
}

HalfSums half_sums(std::span<const std::int64_t> c) {
  if (c.empty() || c.size() > static_cast<std::size_t>(kScanLimit)) {
    throw Error(ErrorCode::TooLarge, "partition scan needs 1 <= n <= " + std::to_string(kScanLimit));
  }
  HalfSums h;
  h.lo_bits = static_cast<int>(c.size() / 2);
  h.lo_mask = (std::uint64_t{1} << h.lo_bits) - 1;
  h.lo = subset_sums(c.first(static_cast<std::size_t>(h.lo_bits)));
  h.hi = subset_sums(c.subspan(static_cast<std::size_t>(h.lo_bits)));
  return h;
}

std::int64_t total_of(std::span<const std::int64_t> c) {
  std::int64_t t = 0;
  for (auto x : c) t += x;
  return t;
}

// Lexicographic (|delta|, mask) comparison.
inline bool improves(std::int64_t delta, std::uint64_t mask, const ScanResult& best) noexcept {
  if (!best.found) return true;
  const std::int64_t a = std::llabs(delta);
  const std::int64_t b = std::llabs(best.delta);
  return a < b || (a == b && mask < best.mask);
}

inline void merge_into(ScanResult& best, const ScanResult& other) noexcept {
  best.evaluated += other.evaluated;
  if (other.found && improves(other.delta, other.mask, best)) {
    best.delta = other.delta;
    best.mask = other.mask;
    best.found = true;
  }
}

inline bool leq_bits(int n, std::uint64_t v, std::uint64_t w) noexcept {
  int gap = 0;
  for (int i = 0; i < n; ++i) {
    gap += static_cast<int>((w >> i) & 1U) - static_cast<int>((v >> i) & 1U);
    if (gap < 0) return false;
  }
  return true;
}

void fill_closure_row(std::span<const SignVector> nodes, std::size_t i, BitMatrix& out) {
  const int n = nodes[i].size();
  const std::uint64_t vi = nodes[i].bits();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j != i && nodes[j].size() == n && leq_bits(n, vi, nodes[j].bits())) out.set(i, j);
  }
}

void check_same_length(std::span<const SignVector> nodes) {
  for (const auto& v : nodes) {
    if (v.size() != nodes.front().size()) throw Error(ErrorCode::LengthMismatch, "closure nodes differ in length");
  }
}

void reduction_row(const BitMatrix& closure, const BitMatrix& preds, std::size_t i,
                   std::vector<std::pair<int, int>>& out) {
  const auto succ = closure.row(i);
  for (std::size_t j = 0; j < closure.size(); ++j) {
    if (!closure.test(i, j)) continue;
    const auto pred = preds.row(j);
    bool between = false;
    for (std::size_t w = 0; w < succ.size() && !between; ++w) between = (succ[w] & pred[w]) != 0;
    if (!between) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
}

void check_histogram_n(int n) {
  if (n < 1 || n > kEnumerateLimit) {
    throw Error(ErrorCode::TooLarge, "rank histogram needs 1 <= n <= " + std::to_string(kEnumerateLimit));
  }
}

}  // namespace

namespace serial {

ScanResult scan_partitions(std::span<const std::int64_t> c, ScanFilter filter) {
  const HalfSums sums = half_sums(c);
  const int n = static_cast<int>(c.size());
  const std::int64_t total = total_of(c);
  const std::uint64_t reps = std::uint64_t{1} << (n - 1);
  ScanResult best;
  for (std::uint64_t i = 0; i < reps; ++i) {
    const std::uint64_t mask = (i << 1) | 1U;
    if (filter == ScanFilter::QOnly && classify_bits(n, mask) != PosetKind::Q) continue;
    ++best.evaluated;
    const std::int64_t in = sums(mask);
    const std::int64_t d = in - (total - in);
    if (improves(d, mask, best)) {
      best.delta = d;
      best.mask = mask;
      best.found = true;
    }
  }
  return best;
}

std::vector<std::uint64_t> rank_histogram(int n, PosetKind kind) {
  check_histogram_n(n);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n * (n + 1) / 2 + 1), 0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (kind == PosetKind::P || classify_bits(n, bits) == kind) ++hist[static_cast<std::size_t>(p_rank_bits(n, bits))];
  }
  return hist;
}

BitMatrix strict_order_closure(std::span<const SignVector> nodes) {
  BitMatrix out(nodes.size());
  if (nodes.empty()) return out;
  check_same_length(nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) fill_closure_row(nodes, i, out);
  return out;
}

std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& closure) {
  const BitMatrix preds = closure.transposed();
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < closure.size(); ++i) reduction_row(closure, preds, i, out);
  return out;
}

}  // namespace serial

ScanResult scan_partitions(std::span<const std::int64_t> c, ScanFilter filter) {
  const HalfSums sums = half_sums(c);
  const int n = static_cast<int>(c.size());
  const std::int64_t total = total_of(c);
  const auto reps = static_cast<std::int64_t>(std::uint64_t{1} << (n - 1));
  ScanResult best;
#pragma omp parallel
  {
    ScanResult local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < reps; ++i) {
      const std::uint64_t mask = (static_cast<std::uint64_t>(i) << 1) | 1U;
      if (filter == ScanFilter::QOnly && classify_bits(n, mask) != PosetKind::Q) continue;
      ++local.evaluated;
      const std::int64_t in = sums(mask);
      const std::int64_t d = in - (total - in);
      if (improves(d, mask, local)) {
        local.delta = d;
        local.mask = mask;
        local.found = true;
      }
    }
#pragma omp critical(partposet_scan_merge)
    merge_into(best, local);
  }
  return best;
}

std::vector<std::uint64_t> rank_histogram(int n, PosetKind kind) {
  check_histogram_n(n);
  const std::size_t levels = static_cast<std::size_t>(n * (n + 1) / 2 + 1);
  std::vector<std::uint64_t> hist(levels, 0);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(levels, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t b = 0; b < count; ++b) {
      const auto bits = static_cast<std::uint64_t>(b);
      if (kind == PosetKind::P || classify_bits(n, bits) == kind) ++local[static_cast<std::size_t>(p_rank_bits(n, bits))];
    }
#pragma omp critical(partposet_hist_merge)
    for (std::size_t r = 0; r < levels; ++r) hist[r] += local[r];
  }
  return hist;
}

BitMatrix strict_order_closure(std::span<const SignVector> nodes) {
  BitMatrix out(nodes.size());
  if (nodes.empty()) return out;
  check_same_length(nodes);
  const auto count = static_cast<std::int64_t>(nodes.size());
  // Rows are disjoint word ranges, so threads never share a word.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) fill_closure_row(nodes, static_cast<std::size_t>(i), out);
  return out;
}

std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& closure) {
  const BitMatrix preds = closure.transposed();
  const auto count = static_cast<std::int64_t>(closure.size());
  std::vector<std::vector<std::pair<int, int>>> rows(closure.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    reduction_row(closure, preds, static_cast<std::size_t>(i), rows[static_cast<std::size_t>(i)]);
  }
  std::vector<std::pair<int, int>> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace partposet::kernels
