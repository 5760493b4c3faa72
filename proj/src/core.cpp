#include "partposet/core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace partposet {

SignVector::SignVector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxLength) {
    throw Error(ErrorCode::InvalidArgument, "sign vector length must be in [1, 64], got " + std::to_string(n));
  }
  if ((bits & ~full_mask(n)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "bitmask has entries beyond position " + std::to_string(n));
  }
}

SignVector SignVector::from_entries(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  if (n < 1 || n > kMaxLength) {
    throw Error(ErrorCode::InvalidArgument, "sign vector length must be in [1, 64]");
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    const int e = entries[static_cast<std::size_t>(i)];
    if (e == 1) {
      bits |= std::uint64_t{1} << i;
    } else if (e != -1) {
      throw Error(ErrorCode::InvalidArgument, "entries must be +1 or -1");
    }
  }
  return SignVector(n, bits);
}

SignVector SignVector::from_string(std::string_view signs) {
  const int n = static_cast<int>(signs.size());
  if (n < 1 || n > kMaxLength) {
    throw Error(ErrorCode::InvalidArgument, "sign string length must be in [1, 64]");
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    const char ch = signs[static_cast<std::size_t>(i)];
    if (ch == '+') {
      bits |= std::uint64_t{1} << i;
    } else if (ch != '-') {
      throw Error(ErrorCode::InvalidArgument, "sign string may only contain '+' and '-'");
    }
  }
  return SignVector(n, bits);
}

int SignVector::plus_count() const noexcept { return std::popcount(bits_); }

std::vector<int> SignVector::entries() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = (*this)[i];
  return out;
}

std::string SignVector::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '-');
  for (int i = 1; i <= n_; ++i) {
    if (is_plus(i)) s[static_cast<std::size_t>(i - 1)] = '+';
  }
  return s;
}

SubsetRef::SubsetRef(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "ground set size must be nonnegative");
  int prev = 0;
  for (int i : indices_) {
    if (i <= prev || i > n) {
      throw Error(ErrorCode::InvalidArgument, "subset indices must be strictly increasing within [1, n]");
    }
    prev = i;
  }
}

bool SubsetRef::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

SubsetRef Instance::to_original(const SubsetRef& sorted_subset) const {
  if (sorted_subset.ground_size() != size()) {
    throw Error(ErrorCode::LengthMismatch, "subset ground size differs from instance size");
  }
  std::vector<int> out;
  out.reserve(sorted_subset.size());
  for (int i : sorted_subset.indices()) out.push_back(perm[static_cast<std::size_t>(i - 1)]);
  std::sort(out.begin(), out.end());
  return SubsetRef(size(), std::move(out));
}

Instance normalize_instance(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "instance has no values");
  std::int64_t total = 0;
  for (std::int64_t x : raw) {
    if (x < 0) throw Error(ErrorCode::NegativeValue, "value " + std::to_string(x) + " is negative");
    if (__builtin_add_overflow(total, x, &total)) {
      throw Error(ErrorCode::Overflow, "sum of values exceeds 63 bits");
    }
  }
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[static_cast<std::size_t>(a)] > raw[static_cast<std::size_t>(b)];
  });
  Instance inst;
  inst.total = total;
  inst.c.reserve(raw.size());
  inst.perm.reserve(raw.size());
  for (int idx : order) {
    inst.c.push_back(raw[static_cast<std::size_t>(idx)]);
    inst.perm.push_back(idx + 1);
  }
  return inst;
}

SignVector from_subset(const SubsetRef& s) {
  std::uint64_t bits = 0;
  for (int i : s.indices()) bits |= std::uint64_t{1} << (i - 1);
  return SignVector(s.ground_size(), bits);
}

SubsetRef to_subset(const SignVector& v) {
  std::vector<int> idx;
  for (int i = 1; i <= v.size(); ++i) {
    if (v.is_plus(i)) idx.push_back(i);
  }
  return SubsetRef(v.size(), std::move(idx));
}

PrefixSums prefix_sums(const SignVector& v) {
  PrefixSums r;
  r.sums.resize(static_cast<std::size_t>(v.size()));
  int acc = 0;
  for (int i = 1; i <= v.size(); ++i) {
    acc += v[i];
    r.sums[static_cast<std::size_t>(i - 1)] = acc;
  }
  return r;
}

bool leq(const SignVector& v, const SignVector& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "sign vectors differ in length");
  // Running value of r(w) - r(v); each step moves it by -2, 0 or +2.
  int gap = 0;
  const std::uint64_t vb = v.bits();
  const std::uint64_t wb = w.bits();
  for (int i = 0; i < v.size(); ++i) {
    gap += static_cast<int>((wb >> i) & 1U) - static_cast<int>((vb >> i) & 1U);
    if (gap < 0) return false;
  }
  return true;
}

std::int64_t dot(const SignVector& v, std::span<const std::int64_t> c) {
  if (static_cast<std::size_t>(v.size()) != c.size()) {
    throw Error(ErrorCode::LengthMismatch, "sign vector and weights differ in length");
  }
  std::int64_t acc = 0;
  for (int i = 1; i <= v.size(); ++i) {
    const std::int64_t ci = c[static_cast<std::size_t>(i - 1)];
    acc += v.is_plus(i) ? ci : -ci;
  }
  return acc;
}

std::int64_t delta(const SignVector& v, const Instance& inst) { return dot(v, inst.c); }

std::vector<std::int64_t> diff_vector(const Instance& inst) {
  const std::size_t n = inst.c.size();
  std::vector<std::int64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t next = i + 1 < n ? inst.c[i + 1] : 0;
    d[i] = inst.c[i] - next;
  }
  return d;
}

SubsetRef iso_f(const SignVector& v) {
  const int n = v.size();
  std::vector<int> idx;
  for (int i = 1; i <= n; ++i) {
    if (v.is_plus(n + 1 - i)) idx.push_back(i);
  }
  return SubsetRef(n, std::move(idx));
}

bool dominance_leq(const SubsetRef& a, const SubsetRef& b) {
  if (a.ground_size() != b.ground_size()) throw Error(ErrorCode::LengthMismatch, "subsets of different ground sets");
  const auto& ai = a.indices();
  const auto& bi = b.indices();
  if (ai.size() > bi.size()) return false;
  // Compare i-th largest elements.
  for (std::size_t k = 0; k < ai.size(); ++k) {
    if (ai[ai.size() - 1 - k] > bi[bi.size() - 1 - k]) return false;
  }
  return true;
}

}  // namespace partposet
