#include "partposet/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace partposet {

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw Error(ErrorCode::Overflow, to_string() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string BigCount::to_string() const {
  if (value_ == 0) return "0";
  std::string digits;
  value_type v = value_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigCount& BigCount::operator+=(const BigCount& o) {
  if (__builtin_add_overflow(value_, o.value_, &value_)) throw Error(ErrorCode::Overflow, "128-bit count overflow");
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (__builtin_sub_overflow(value_, o.value_, &value_)) throw Error(ErrorCode::Overflow, "128-bit count underflow");
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
  if (__builtin_mul_overflow(value_, o.value_, &value_)) throw Error(ErrorCode::Overflow, "128-bit count overflow");
  return *this;
}

BigCount BigCount::div_exact(std::uint64_t d) const {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (value_ % d != 0) throw std::logic_error("inexact division of " + to_string());
  return from_raw(value_ / d);
}

BigCount RankProfile::total() const {
  BigCount sum;
  for (const auto& c : counts) sum += c;
  return sum;
}

namespace {

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > kCountingLimit) {
    throw Error(ErrorCode::TooLarge, "counting is limited to n <= " + std::to_string(kCountingLimit));
  }
}

int max_rank(int n) { return n * (n + 1) / 2; }

// Sum of the weights n+1-j over positions j in [from, to].
int weight_sum(int n, int from, int to) {
  if (from > to) return 0;
  return (to - from + 1) * (2 * n + 2 - from - to) / 2;
}

// Walk DP layer: for each height h, counts over the contiguous P-rank range
// [lo[h], lo[h] + counts[h].size()).
struct WalkLayer {
  std::vector<int> lo;
  std::vector<std::vector<BigCount>> counts;
};

}  // namespace

RankProfile p_rank_profile(int n) {
  check_n(n);
  RankProfile prof{PosetKind::P, n, std::vector<BigCount>(static_cast<std::size_t>(max_rank(n) + 1))};
  auto& c = prof.counts;
  c[0] = 1;
  int reach = 0;
  for (int i = 1; i <= n; ++i) {
    reach += i;
    for (int t = reach; t >= i; --t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - i)];
  }
  return prof;
}

RankProfile rplus_rank_profile(int n) {
  check_n(n);
  // After i steps at height h the path has p = (i + h) / 2 up-steps among
  // positions 1..i, so its rank lies between the p smallest and p largest
  // weights; only that window is stored.
  auto bounds = [n](int i, int h) {
    const int p = (i + h) / 2;
    return std::pair{weight_sum(n, i - p + 1, i), weight_sum(n, 1, p)};
  };
  WalkLayer cur;
  cur.lo = {0};
  cur.counts = {{BigCount(1)}};
  for (int i = 1; i <= n; ++i) {
    const int w = n + 1 - i;
    WalkLayer next;
    next.lo.assign(static_cast<std::size_t>(i + 1), 0);
    next.counts.resize(static_cast<std::size_t>(i + 1));
    for (int h = i % 2; h <= i; h += 2) {
      const auto [lo, hi] = bounds(i, h);
      next.lo[static_cast<std::size_t>(h)] = lo;
      next.counts[static_cast<std::size_t>(h)].assign(static_cast<std::size_t>(hi - lo + 1), BigCount{});
    }
    for (int h = (i - 1) % 2; h <= i - 1; h += 2) {
      const auto& src = cur.counts[static_cast<std::size_t>(h)];
      const int src_lo = cur.lo[static_cast<std::size_t>(h)];
      // Up-step: height h+1, rank + w.
      {
        auto& dst = next.counts[static_cast<std::size_t>(h + 1)];
        const int off = src_lo + w - next.lo[static_cast<std::size_t>(h + 1)];
        for (std::size_t k = 0; k < src.size(); ++k) {
          if (src[k] != BigCount{}) dst[static_cast<std::size_t>(off) + k] += src[k];
        }
      }
      // Down-step: height h-1, rank unchanged; forbidden below zero.
      if (h >= 1) {
        auto& dst = next.counts[static_cast<std::size_t>(h - 1)];
        const int off = src_lo - next.lo[static_cast<std::size_t>(h - 1)];
        for (std::size_t k = 0; k < src.size(); ++k) {
          if (src[k] != BigCount{}) dst[static_cast<std::size_t>(off) + k] += src[k];
        }
      }
    }
    cur = std::move(next);
  }
  RankProfile prof{PosetKind::RPlus, n, std::vector<BigCount>(static_cast<std::size_t>(max_rank(n) + 1))};
  for (int h = n % 2; h <= n; h += 2) {
    const auto& src = cur.counts[static_cast<std::size_t>(h)];
    for (std::size_t k = 0; k < src.size(); ++k) {
      prof.counts[static_cast<std::size_t>(cur.lo[static_cast<std::size_t>(h)]) + k] += src[k];
    }
  }
  return prof;
}

RankProfile rminus_rank_profile(int n) {
  RankProfile prof = rplus_rank_profile(n);
  prof.kind = PosetKind::RMinus;
  std::reverse(prof.counts.begin(), prof.counts.end());
  return prof;
}

RankProfile q_rank_profile(int n) {
  check_n(n);
  const RankProfile p = p_rank_profile(n);
  const RankProfile plus = rplus_rank_profile(n);
  const RankProfile minus = rminus_rank_profile(n);
  const int top = max_rank(n);
  RankProfile prof{PosetKind::Q, n, {}};
  for (int r = 0; r <= top; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    const BigCount q = p.counts[idx] - plus.counts[idx] - minus.counts[idx];
    if (r < n || r > top - n) {
      if (q != BigCount{}) throw std::logic_error("Q has members outside P-ranks [n, n(n+1)/2 - n]");
      continue;
    }
    prof.counts.push_back(q);
  }
  return prof;
}

RankProfile rank_profile(int n, PosetKind kind) {
  switch (kind) {
    case PosetKind::P: return p_rank_profile(n);
    case PosetKind::Q: return q_rank_profile(n);
    case PosetKind::RPlus: return rplus_rank_profile(n);
    case PosetKind::RMinus: return rminus_rank_profile(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown poset kind");
}

BigCount binomial(int n, int k) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "binomial needs n >= 0");
  if (n > 2 * kCountingLimit) throw Error(ErrorCode::TooLarge, "binomial argument too large");
  if (k < 0 || k > n) return BigCount{};
  k = std::min(k, n - k);
  BigCount r(1);
  for (int i = 1; i <= k; ++i) {
    r *= BigCount(static_cast<std::uint64_t>(n - k + i));
    r = r.div_exact(static_cast<std::uint64_t>(i));
  }
  return r;
}

BigCount catalan(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "catalan needs m >= 0");
  if (m > kCountingLimit / 2) throw Error(ErrorCode::TooLarge, "catalan index too large");
  return binomial(2 * m, m).div_exact(static_cast<std::uint64_t>(m + 1));
}

BigCount ballot_recurrence(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  if (n > kCountingLimit) throw Error(ErrorCode::TooLarge, "counting is limited to n <= 120");
  BigCount x(1);
  for (int i = 1; i <= n; ++i) {
    x *= BigCount(2);
    if (i % 2 == 1) x -= catalan((i - 1) / 2);
  }
  return x;
}

BigCount ballot_count(int n) {
  const BigCount rec = ballot_recurrence(n);
  const BigCount closed = binomial(n, n / 2);
  if (rec != closed) {
    throw std::logic_error("ballot recurrence " + rec.to_string() + " != C(n, n/2) = " + closed.to_string());
  }
  return rec;
}

BigCount width_value(int n) {
  const RankProfile p = p_rank_profile(n);
  return p.counts[static_cast<std::size_t>(n * (n + 1) / 4)];
}

BigCount q_size(int n) {
  check_n(n);
  const BigCount all = BigCount::from_raw(BigCount::value_type{1} << n);
  return all - BigCount(2) * binomial(n, n / 2);
}

BigCount poset_size(int n, PosetKind kind) {
  check_n(n);
  switch (kind) {
    case PosetKind::P: return BigCount::from_raw(BigCount::value_type{1} << n);
    case PosetKind::Q: return q_size(n);
    case PosetKind::RPlus:
    case PosetKind::RMinus: return binomial(n, n / 2);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown poset kind");
}

std::int64_t height_formula(int n, PosetKind kind) {
  check_n(n);
  const std::int64_t nn = n;
  if (kind == PosetKind::P) return nn * (nn + 1) / 2 + 1;
  if (kind != PosetKind::Q) throw Error(ErrorCode::InvalidArgument, "height formula covers P and Q only");
  if (n < 3) throw Error(ErrorCode::TooSmall, "Q(" + std::to_string(n) + ") is empty");
  if (n <= 7) {
    const std::int64_t ell = (nn - 1) / 2;
    // Doubled to keep the 3l/2 term integral.
    return (nn * (nn - 1) - (2 * nn - 3 * ell) * (ell + 1) + 2) / 2;
  }
  return (nn - 2) * (nn - 3) / 2 + 1;
}

ProfileChecks profile_checks(const std::vector<BigCount>& counts) {
  ProfileChecks out;
  std::size_t first = 0;
  std::size_t last = counts.size();
  while (first < last && counts[first] == BigCount{}) ++first;
  while (last > first && counts[last - 1] == BigCount{}) --last;
  out.symmetric = true;
  for (std::size_t i = first, j = last; i < j; ++i, --j) {
    if (counts[i] != counts[j - 1]) {
      out.symmetric = false;
      break;
    }
  }
  std::size_t i = first;
  while (i + 1 < last && counts[i] <= counts[i + 1]) ++i;
  while (i + 1 < last && counts[i] >= counts[i + 1]) ++i;
  out.unimodal = i + 1 >= last;
  for (std::size_t k = first; k < last; ++k) out.max_level = std::max(out.max_level, counts[k]);
  return out;
}

ProfileChecks profile_checks(const RankProfile& profile) { return profile_checks(profile.counts); }

}  // namespace partposet
