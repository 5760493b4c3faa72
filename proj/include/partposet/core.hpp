#pragma once

// Sign vectors (elements of P(n)), subsets of [n], normalized partition
// instances, and the arithmetic tying them together.
//
// Positions are 1-based throughout the public API to match the [n]
// convention; the bitmask stores entry i in bit i-1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partposet/error.hpp"

namespace partposet {

inline constexpr int kMaxLength = 64;

class SubsetRef;

/// A length-n vector over {+1, -1}, stored as a bitmask (bit i-1 set means
/// entry i is +1). Immutable once built.
class SignVector {
 public:
  /// Throws InvalidArgument if n is outside [1, 64] or bits has entries
  /// beyond position n.
  SignVector(int n, std::uint64_t bits);

  static SignVector all_minus(int n) { return SignVector(n, 0); }
  static SignVector all_plus(int n) { return SignVector(n, full_mask(n)); }
  /// Entries must each be +1 or -1.
  static SignVector from_entries(std::span<const int> entries);
  /// Parses a sign string such as "+-+--".
  static SignVector from_string(std::string_view signs);

  int size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  /// Entry at 1-based position i, either +1 or -1.
  int operator[](int i) const noexcept { return ((bits_ >> (i - 1)) & 1U) ? 1 : -1; }
  bool is_plus(int i) const noexcept { return (bits_ >> (i - 1)) & 1U; }

  int plus_count() const noexcept;
  std::vector<int> entries() const;
  /// "+" / "-" per entry, read left to right.
  std::string to_string() const;

  static constexpr std::uint64_t full_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector& a, const SignVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_;
  std::uint64_t bits_;
};

/// Running sums r_i = v_1 + ... + v_i of a sign vector.
struct PrefixSums {
  std::vector<int> sums;

  int size() const noexcept { return static_cast<int>(sums.size()); }
  int operator[](int i) const noexcept { return sums[static_cast<std::size_t>(i - 1)]; }
};

/// A subset of [n]: strictly increasing 1-based indices.
class SubsetRef {
 public:
  /// Throws InvalidArgument unless indices are strictly increasing and in [1, n].
  SubsetRef(int n, std::vector<int> indices);

  int ground_size() const noexcept { return n_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(int i) const;

  friend bool operator==(const SubsetRef&, const SubsetRef&) = default;

 private:
  int n_;
  std::vector<int> indices_;
};

/// A partition instance sorted non-increasingly. perm[i-1] is the original
/// 1-based position of sorted entry i.
struct Instance {
  std::vector<std::int64_t> c;
  std::vector<int> perm;
  std::int64_t total = 0;

  int size() const noexcept { return static_cast<int>(c.size()); }
  /// Maps a subset of sorted positions back to original positions.
  SubsetRef to_original(const SubsetRef& sorted_subset) const;
};

/// Sorts raw values non-increasingly (stable). Errors: EmptyInput,
/// NegativeValue, Overflow when the total exceeds 63 bits.
Instance normalize_instance(std::span<const std::int64_t> raw);

SignVector from_subset(const SubsetRef& s);
SubsetRef to_subset(const SignVector& v);

inline SignVector negate(const SignVector& v) {
  return SignVector(v.size(), ~v.bits() & SignVector::full_mask(v.size()));
}

PrefixSums prefix_sums(const SignVector& v);

/// Prefix-sum dominance. Throws LengthMismatch if sizes differ.
bool leq(const SignVector& v, const SignVector& w);
inline bool strictly_less(const SignVector& v, const SignVector& w) { return v != w && leq(v, w); }

/// Partition difference v . c. Throws LengthMismatch.
std::int64_t delta(const SignVector& v, const Instance& inst);
/// Raw dot product against an arbitrary weight sequence of the same length.
std::int64_t dot(const SignVector& v, std::span<const std::int64_t> c);

/// d_i = c_i - c_{i+1}, with c_{n+1} = 0.
std::vector<std::int64_t> diff_vector(const Instance& inst);

/// Image of v in M(n): i belongs to the result iff v_{n+1-i} = +1.
SubsetRef iso_f(const SignVector& v);

/// Dominance order on M(n): with both sides sorted decreasingly, |a| <= |b|
/// and a_i <= b_i for every i <= |a|.
bool dominance_leq(const SubsetRef& a, const SubsetRef& b);

}  // namespace partposet
