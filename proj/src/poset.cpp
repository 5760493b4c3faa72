#include "partposet/poset.hpp"

#include <algorithm>
#include <string>

namespace partposet {

std::string_view to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::P: return "P";
    case PosetKind::Q: return "Q";
    case PosetKind::RPlus: return "RPlus";
    case PosetKind::RMinus: return "RMinus";
  }
  return "?";
}

PosetKind parse_poset_kind(std::string_view name) {
  if (name == "P") return PosetKind::P;
  if (name == "Q") return PosetKind::Q;
  if (name == "RPlus" || name == "R+") return PosetKind::RPlus;
  if (name == "RMinus" || name == "R-") return PosetKind::RMinus;
  throw Error(ErrorCode::InvalidArgument, "unknown poset '" + std::string(name) + "'");
}

PosetKind membership(const SignVector& v) { return classify_bits(v.size(), v.bits()); }

bool belongs(const SignVector& v, PosetKind kind) {
  return kind == PosetKind::P || membership(v) == kind;
}

namespace {

void check_position(const SignVector& v, int k) {
  if (k < 1 || k > v.size()) {
    throw Error(ErrorCode::OperatorUndefined, "position " + std::to_string(k) + " outside [1, " +
                                                  std::to_string(v.size()) + "]");
  }
}

void require_member(const SignVector& v, PosetKind kind) {
  if (!belongs(v, kind)) {
    throw Error(ErrorCode::NotInPoset, v.to_string() + " is not in " + std::string(to_string(kind)));
  }
}

}  // namespace

SignVector apply_addition(const SignVector& v, int k) {
  check_position(v, k);
  if (v.is_plus(k)) {
    throw Error(ErrorCode::OperatorUndefined, "A^(" + std::to_string(k) + ") needs entry " + std::to_string(k) + " = -1");
  }
  return SignVector(v.size(), v.bits() | (std::uint64_t{1} << (k - 1)));
}

SignVector apply_swap(const SignVector& v, int j, int k) {
  check_position(v, j);
  check_position(v, k);
  if (j >= k || v.is_plus(j) || !v.is_plus(k)) {
    throw Error(ErrorCode::OperatorUndefined, "S^(" + std::to_string(j) + "," + std::to_string(k) +
                                                  ") needs j < k, v_j = -1 and v_k = +1");
  }
  const std::uint64_t flip = (std::uint64_t{1} << (j - 1)) | (std::uint64_t{1} << (k - 1));
  return SignVector(v.size(), v.bits() ^ flip);
}

std::vector<SignVector> upper_covers(const SignVector& v, PosetKind kind) {
  require_member(v, kind);
  const int n = v.size();
  std::vector<SignVector> out;
  if (!v.is_plus(n)) out.push_back(apply_addition(v, n));
  for (int k = 1; k < n; ++k) {
    if (!v.is_plus(k) && v.is_plus(k + 1)) out.push_back(apply_swap(v, k, k + 1));
  }
  if (kind != PosetKind::P) {
    std::erase_if(out, [kind](const SignVector& w) { return membership(w) != kind; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> lower_covers(const SignVector& v, PosetKind kind) {
  require_member(v, kind);
  std::vector<SignVector> out = upper_covers(negate(v), mirrored(kind));
  for (auto& w : out) w = negate(w);
  std::sort(out.begin(), out.end());
  return out;
}

int p_rank(const SignVector& v) { return p_rank_bits(v.size(), v.bits()); }

int rank(const SignVector& v, PosetKind kind) {
  require_member(v, kind);
  const int r = p_rank(v);
  return kind == PosetKind::Q ? r - v.size() : r;
}

std::vector<std::int64_t> rank_weights(int n) {
  std::vector<std::int64_t> c0(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c0[static_cast<std::size_t>(i)] = n - i;
  return c0;
}

SignVector maximal_element(int n, int k) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "Q(" + std::to_string(n) + ") is empty");
  if (n > kMaxLength) throw Error(ErrorCode::TooLarge, "n exceeds 64");
  const int ell = (n - 1) / 2;
  if (k < 0 || k > ell) {
    throw Error(ErrorCode::InvalidArgument, "k must lie in [0, " + std::to_string(ell) + "]");
  }
  // Ones everywhere except positions k+1 .. 2k+1.
  const std::uint64_t hole = SignVector::full_mask(2 * k + 1) & ~SignVector::full_mask(k);
  return SignVector(n, SignVector::full_mask(n) & ~hole);
}

Extremes extremes(int n) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "Q(" + std::to_string(n) + ") is empty");
  Extremes e;
  e.n = n;
  e.ell = (n - 1) / 2;
  for (int k = 0; k <= e.ell; ++k) {
    e.maximal.push_back(maximal_element(n, k));
    e.minimal.push_back(negate(e.maximal.back()));
  }
  return e;
}

namespace {

SignVector from_walk(int n, const std::vector<int>& walk) {
  std::uint64_t bits = 0;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    if (walk[static_cast<std::size_t>(i)] > prev) bits |= std::uint64_t{1} << i;
    prev = walk[static_cast<std::size_t>(i)];
  }
  return SignVector(n, bits);
}

}  // namespace

MeetJoin meet_join(const SignVector& v, const SignVector& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "sign vectors differ in length");
  const auto rv = prefix_sums(v);
  const auto rw = prefix_sums(w);
  std::vector<int> lo(rv.sums.size());
  std::vector<int> hi(rv.sums.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::min(rv.sums[i], rw.sums[i]);
    hi[i] = std::max(rv.sums[i], rw.sums[i]);
  }
  return {from_walk(v.size(), lo), from_walk(v.size(), hi)};
}

void for_each_member(int n, PosetKind kind, const std::function<void(const SignVector&)>& visit, bool force) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > kEnumerateLimit && !force) {
    throw Error(ErrorCode::TooLarge, "enumeration of n = " + std::to_string(n) + " exceeds limit " +
                                         std::to_string(kEnumerateLimit));
  }
  if (n >= kMaxLength) throw Error(ErrorCode::TooLarge, "cannot enumerate 2^64 vectors");
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (kind == PosetKind::P || classify_bits(n, bits) == kind) visit(SignVector(n, bits));
  }
}

std::vector<SignVector> enumerate(int n, PosetKind kind, bool force) {
  std::vector<SignVector> out;
  for_each_member(n, kind, [&](const SignVector& v) { out.push_back(v); }, force);
  return out;
}

}  // namespace partposet
