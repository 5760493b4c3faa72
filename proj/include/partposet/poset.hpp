#pragma once

// Structure of P(n), its truncation Q(n), and the two ballot-path pieces
// R+(n) (all prefix sums >= 0) and R-(n) (all prefix sums <= 0).

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "partposet/core.hpp"

namespace partposet {

enum class PosetKind { P, Q, RPlus, RMinus };

std::string_view to_string(PosetKind kind);
/// Accepts "P", "Q", "RPlus"/"R+", "RMinus"/"R-". Throws InvalidArgument.
PosetKind parse_poset_kind(std::string_view name);

/// The kind whose members are the negations of `kind`'s members.
constexpr PosetKind mirrored(PosetKind kind) {
  switch (kind) {
    case PosetKind::RPlus: return PosetKind::RMinus;
    case PosetKind::RMinus: return PosetKind::RPlus;
    default: return kind;
  }
}

/// Raw-bitmask form of membership() for hot loops; no validation.
inline PosetKind classify_bits(int n, std::uint64_t bits) noexcept {
  int sum = 0;
  bool below = false;
  bool above = false;
  for (int i = 0; i < n; ++i) {
    sum += ((bits >> i) & 1U) ? 1 : -1;
    below |= sum < 0;
    above |= sum > 0;
  }
  // Prefix sums are never all zero (the first is +-1).
  if (!below) return PosetKind::RPlus;
  if (!above) return PosetKind::RMinus;
  return PosetKind::Q;
}

/// Raw-bitmask form of p_rank().
inline int p_rank_bits(int n, std::uint64_t bits) noexcept {
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1U) r += n - i;
  }
  return r;
}

/// Classifies v as RPlus, RMinus or Q. Never returns P.
PosetKind membership(const SignVector& v);
bool belongs(const SignVector& v, PosetKind kind);

/// A^(k): sets entry k from -1 to +1. Throws OperatorUndefined.
SignVector apply_addition(const SignVector& v, int k);
/// S^(j,k): swaps a -1 at j with a +1 at k > j. Throws OperatorUndefined.
SignVector apply_swap(const SignVector& v, int j, int k);

/// Covers of v within `kind`, ascending by bitmask. Upper covers come from
/// A^(n) and the adjacent swaps; lower covers are negated upper covers of -v.
/// Throws NotInPoset.
std::vector<SignVector> upper_covers(const SignVector& v, PosetKind kind);
std::vector<SignVector> lower_covers(const SignVector& v, PosetKind kind);

/// P-rank: (v . c0 + n(n+1)/2) / 2 with c0 = (n, ..., 1); equals the sum of
/// n+1-i over the +1 positions i.
int p_rank(const SignVector& v);
/// Rank with minimum 0 in the named poset (Q subtracts n). Throws NotInPoset.
int rank(const SignVector& v, PosetKind kind);

/// The weight vector (n, n-1, ..., 1).
std::vector<std::int64_t> rank_weights(int n);

/// m_k for k = 0..ell and their negations. Throws TooSmall for n < 3.
struct Extremes {
  int n = 0;
  int ell = 0;
  std::vector<SignVector> maximal;
  std::vector<SignVector> minimal;
};

/// m_k = (+1 x k, -1 x (k+1), +1 x (n-2k-1)).
SignVector maximal_element(int n, int k);
Extremes extremes(int n);

struct MeetJoin {
  SignVector meet;
  SignVector join;
};

/// Pointwise min/max of prefix sums. Throws LengthMismatch.
MeetJoin meet_join(const SignVector& v, const SignVector& w);

inline constexpr int kEnumerateLimit = 24;

/// Visits each member of the poset once, ascending bitmask order.
/// Throws TooLarge above kEnumerateLimit unless force is set.
void for_each_member(int n, PosetKind kind, const std::function<void(const SignVector&)>& visit,
                     bool force = false);
std::vector<SignVector> enumerate(int n, PosetKind kind, bool force = false);

}  // namespace partposet
