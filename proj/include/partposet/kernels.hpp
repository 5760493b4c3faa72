#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version in
// partposet::kernels and a plain serial reference in
// partposet::kernels::serial; both must return identical results, and the
// tests and the benchmark compare them. Without OpenMP the parallel
// versions compile to serial loops.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "partposet/core.hpp"
#include "partposet/poset.hpp"

namespace partposet::kernels {

/// Dense square bit matrix, row-major, 64 columns per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n_ * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept { data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept { return {data_.data() + i * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t i) noexcept { return {data_.data() + i * words_, words_}; }

  std::size_t count() const noexcept;
  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Which sign vectors a partition scan evaluates. Both variants only look at
/// vectors with first entry +1, one representative per {v, -v} pair.
enum class ScanFilter { AllPartitions, QOnly };

struct ScanResult {
  std::int64_t delta = 0;      // signed difference of the best vector
  std::uint64_t mask = 0;      // its bitmask on the sorted instance
  std::uint64_t evaluated = 0; // number of vectors scanned
  bool found = false;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

inline constexpr int kScanLimit = 40;

/// Minimum |v . c| over the filtered vectors; ties go to the smaller mask.
/// c must have length in [1, kScanLimit].
ScanResult scan_partitions(std::span<const std::int64_t> c, ScanFilter filter);

/// Number of members of `kind` at each P-rank 0 .. n(n+1)/2.
std::vector<std::uint64_t> rank_histogram(int n, PosetKind kind);

/// closure(i, j) set iff nodes[i] strictly precedes nodes[j].
BitMatrix strict_order_closure(std::span<const SignVector> nodes);

/// Cover pairs (i, j) of a strict order given by its closure, sorted.
std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& closure);

namespace serial {

ScanResult scan_partitions(std::span<const std::int64_t> c, ScanFilter filter);
std::vector<std::uint64_t> rank_histogram(int n, PosetKind kind);
BitMatrix strict_order_closure(std::span<const SignVector> nodes);
std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& closure);

}  // namespace serial

/// Threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace partposet::kernels
