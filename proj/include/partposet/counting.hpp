#pragma once

// Exact level counts of P(n), R+(n), R-(n) and Q(n) without enumeration,
// plus the closed forms for size, width and height.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "partposet/poset.hpp"

namespace partposet {

/// Unsigned 128-bit count. Every arithmetic operator traps overflow (and
/// underflow on subtraction) with ErrorCode::Overflow.
class BigCount {
 public:
  __extension__ using value_type = unsigned __int128;

  constexpr BigCount() = default;
  constexpr BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr BigCount from_raw(value_type v) {
    BigCount b;
    b.value_ = v;
    return b;
  }

  constexpr value_type raw() const noexcept { return value_; }
  constexpr bool fits_u64() const noexcept { return value_ <= UINT64_MAX; }
  std::uint64_t to_u64() const;
  /// Nearest double, for ratios in diagnostics only.
  double to_double() const noexcept { return static_cast<double>(value_); }
  std::string to_string() const;

  BigCount& operator+=(const BigCount& o);
  BigCount& operator-=(const BigCount& o);
  BigCount& operator*=(const BigCount& o);
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  /// Exact division; throws InvalidArgument on a zero divisor.
  BigCount div_exact(std::uint64_t d) const;

  friend constexpr bool operator==(const BigCount&, const BigCount&) = default;
  friend constexpr std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
                               : (a.value_ > b.value_ ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  value_type value_ = 0;
};

inline constexpr int kCountingLimit = 120;

/// Counts of poset members per rank. For P, R+ and R- the index is the
/// P-rank 0 .. n(n+1)/2; for Q it is the Q-rank (P-rank minus n).
struct RankProfile {
  PosetKind kind = PosetKind::P;
  int n = 0;
  std::vector<BigCount> counts;

  BigCount total() const;
};

/// counts[t] = number of subsets of [n] with element sum t (coefficients of
/// prod (1 + q^i)). Throws TooLarge for n > 120, InvalidArgument for n < 1.
RankProfile p_rank_profile(int n);
/// Members with all prefix sums >= 0, by P-rank, via a walk DP over
/// (step, height).
RankProfile rplus_rank_profile(int n);
/// Reflection of the R+ profile (rank r -> n(n+1)/2 - r).
RankProfile rminus_rank_profile(int n);
/// P minus R+ minus R-, shifted down by n. Empty for n < 3.
RankProfile q_rank_profile(int n);
RankProfile rank_profile(int n, PosetKind kind);

BigCount binomial(int n, int k);
BigCount catalan(int m);
/// X_n from X_0 = 1, X_n = 2 X_{n-1} - C_{(n-1)/2} (n odd), 2 X_{n-1} (n even).
BigCount ballot_recurrence(int n);
/// Recurrence value after checking it against C(n, floor(n/2)); a mismatch
/// throws std::logic_error.
BigCount ballot_count(int n);

/// N([n], floor(n(n+1)/4)).
BigCount width_value(int n);
/// 2^n - 2 C(n, floor(n/2)).
BigCount q_size(int n);
/// 2^n, C(n, floor(n/2)), or q_size depending on kind.
BigCount poset_size(int n, PosetKind kind);

/// Closed-form height. P: n(n+1)/2 + 1. Q: n(n-1)/2 - (n - 3l/2)(l+1) + 1
/// for n <= 7, (n-2)(n-3)/2 + 1 for n >= 8 (l = floor((n-1)/2)).
/// Throws TooSmall for Q with n < 3, InvalidArgument for R+/R-.
std::int64_t height_formula(int n, PosetKind kind);

struct ProfileChecks {
  bool symmetric = false;
  bool unimodal = false;
  BigCount max_level;
};

/// Literal rank-symmetry and rank-unimodality after trimming leading and
/// trailing zero levels.
ProfileChecks profile_checks(const RankProfile& profile);
ProfileChecks profile_checks(const std::vector<BigCount>& counts);

}  // namespace partposet
