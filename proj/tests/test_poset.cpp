#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "partposet/counting.hpp"
#include "partposet/error.hpp"
#include "partposet/hasse.hpp"
#include "partposet/poset.hpp"

using namespace partposet;

namespace {

SignVector sv(std::initializer_list<int> e) {
  std::vector<int> v(e);
  return SignVector::from_entries(v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("addition operator") {
  CHECK(apply_addition(sv({1, -1, -1, -1, -1}), 5) == sv({1, -1, -1, -1, 1}));
  CHECK(apply_addition(sv({-1, 1}), 1) == sv({1, 1}));
  CHECK(code_of([] { apply_addition(sv({1, 1, -1}), 2); }) == ErrorCode::OperatorUndefined);
  for (std::uint64_t m = 0; m < 32; ++m) {
    const SignVector v(5, m);
    for (int k = 1; k <= 5; ++k) {
      if (v[k] == -1) CHECK(strictly_less(v, apply_addition(v, k)));
    }
  }
}

TEST_CASE("swap operator") {
  CHECK(apply_swap(sv({-1, 1, 1, 1, 1}), 1, 2) == sv({1, -1, 1, 1, 1}));
  CHECK(apply_swap(sv({1, -1, -1, 1}), 2, 4) == sv({1, 1, -1, -1}));
  CHECK(code_of([] { apply_swap(sv({1, -1, 1}), 1, 3); }) == ErrorCode::OperatorUndefined);
  CHECK(code_of([] { apply_swap(sv({-1, -1, 1}), 3, 1); }) == ErrorCode::OperatorUndefined);
}

TEST_CASE("membership") {
  CHECK(membership(sv({1, -1, -1})) == PosetKind::Q);
  CHECK(membership(sv({-1, 1, 1})) == PosetKind::Q);
  CHECK(membership(sv({1, -1, 1, -1, 1})) == PosetKind::RPlus);
  CHECK(membership(sv({-1, -1, 1})) == PosetKind::RMinus);
  for (std::uint64_t m = 0; m < 256; ++m) {
    const SignVector v(8, m);
    CHECK((membership(v) == PosetKind::Q) == oracle::in_q(oracle::from_mask(8, m)));
  }
}

TEST_CASE("upper covers") {
  CHECK(upper_covers(sv({1, -1, -1, -1, -1}), PosetKind::P) == std::vector<SignVector>{sv({1, -1, -1, -1, 1})});
  CHECK(upper_covers(sv({-1, 1, 1}), PosetKind::P) == std::vector<SignVector>{sv({1, -1, 1})});
  for (int n = 3; n <= 10; ++n) {
    for (const auto& m : extremes(n).maximal) CHECK(upper_covers(m, PosetKind::Q).empty());
    for (const auto& m : extremes(n).minimal) CHECK(lower_covers(m, PosetKind::Q).empty());
  }
  CHECK(code_of([] { upper_covers(sv({1, 1, 1}), PosetKind::Q); }) == ErrorCode::NotInPoset);
}

TEST_CASE("cover soundness: each cover is above and one rank higher") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto kind : {PosetKind::P, PosetKind::Q}) {
      if (kind == PosetKind::Q && n < 3) continue;
      for (const auto& v : enumerate(n, kind)) {
        for (const auto& w : upper_covers(v, kind)) {
          REQUIRE(strictly_less(v, w));
          REQUIRE(p_rank(w) == p_rank(v) + 1);
        }
      }
    }
  }
}

TEST_CASE("rank") {
  CHECK(rank(SignVector::all_minus(6), PosetKind::P) == 0);
  CHECK(rank(SignVector::all_plus(5), PosetKind::P) == 15);
  CHECK(rank(sv({1, -1, -1, -1, -1}), PosetKind::Q) == 0);
  int lowest = 1000;
  for (const auto& v : enumerate(5, PosetKind::Q)) lowest = std::min(lowest, rank(v, PosetKind::Q));
  CHECK(lowest == 0);
  CHECK(code_of([] { rank(sv({1, 1, 1}), PosetKind::Q); }) == ErrorCode::NotInPoset);
}

TEST_CASE("extremes") {
  const auto e5 = extremes(5);
  CHECK(e5.ell == 2);
  CHECK(e5.maximal == std::vector<SignVector>{sv({-1, 1, 1, 1, 1}), sv({1, -1, -1, 1, 1}), sv({1, 1, -1, -1, -1})});
  for (std::size_t k = 0; k < 3; ++k) CHECK(e5.minimal[k] == negate(e5.maximal[k]));

  const auto e3 = extremes(3);
  std::set<SignVector> mx(e3.maximal.begin(), e3.maximal.end()), mn(e3.minimal.begin(), e3.minimal.end());
  CHECK(mx == std::set<SignVector>{sv({1, -1, -1}), sv({-1, 1, 1})});
  CHECK(mx == mn);

  const auto e4 = extremes(4);
  CHECK(e4.ell == 1);
  CHECK(e4.maximal == std::vector<SignVector>{sv({-1, 1, 1, 1}), sv({1, -1, -1, 1})});

  CHECK(code_of([] { extremes(2); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { extremes(1); }) == ErrorCode::TooSmall);
}

TEST_CASE("extremes match diagram sinks and sources") {
  for (int n = 3; n <= 12; ++n) {
    const auto dag = build_hasse(n, PosetKind::Q);
    auto mx = extremes(n).maximal;
    auto mn = extremes(n).minimal;
    std::sort(mx.begin(), mx.end());
    std::sort(mn.begin(), mn.end());
    CHECK(dag.maximal_nodes() == mx);
    CHECK(dag.minimal_nodes() == mn);
  }
}

TEST_CASE("meet and join") {
  const auto mj = meet_join(sv({1, -1, -1}), sv({-1, 1, 1}));
  CHECK(mj.join == sv({1, -1, 1}));
  CHECK(mj.meet == sv({-1, 1, -1}));
  for (std::uint64_t m = 0; m < 16; ++m) {
    const SignVector v(4, m);
    CHECK(meet_join(v, v).meet == v);
    CHECK(meet_join(v, v).join == v);
    CHECK(meet_join(v, SignVector::all_minus(4)).meet == SignVector::all_minus(4));
  }
  CHECK(code_of([] { meet_join(SignVector(3, 0), SignVector(4, 0)); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("meet and join are greatest lower and least upper bounds on P(5)") {
  const int n = 5;
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      const SignVector v(n, a), w(n, b);
      const auto mj = meet_join(v, w);
      REQUIRE(leq(mj.meet, v));
      REQUIRE(leq(mj.meet, w));
      REQUIRE(leq(v, mj.join));
      REQUIRE(leq(w, mj.join));
      for (std::uint64_t c = 0; c < 32; ++c) {
        const SignVector u(n, c);
        if (leq(u, v) && leq(u, w)) REQUIRE(leq(u, mj.meet));
        if (leq(v, u) && leq(w, u)) REQUIRE(leq(mj.join, u));
      }
    }
  }
}

TEST_CASE("lattice laws on P(4)") {
  auto meet = [](const SignVector& a, const SignVector& b) { return meet_join(a, b).meet; };
  auto join = [](const SignVector& a, const SignVector& b) { return meet_join(a, b).join; };
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const SignVector x(4, a), y(4, b);
      REQUIRE(meet(x, y) == meet(y, x));
      REQUIRE(join(x, y) == join(y, x));
      REQUIRE(meet(x, join(x, y)) == x);
      REQUIRE(join(x, meet(x, y)) == x);
      for (std::uint64_t c = 0; c < 16; ++c) {
        const SignVector z(4, c);
        REQUIRE(meet(x, meet(y, z)) == meet(meet(x, y), z));
        REQUIRE(join(x, join(y, z)) == join(join(x, y), z));
        REQUIRE(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
      }
    }
  }
}

TEST_CASE("enumerate") {
  CHECK(enumerate(4, PosetKind::Q).size() == 4);
  CHECK(enumerate(5, PosetKind::Q).size() == 12);
  CHECK(enumerate(6, PosetKind::Q).size() == 24);
  CHECK(enumerate(4, PosetKind::RPlus).size() == 6);
  for (int n = 1; n <= 16; ++n) {
    const auto q = enumerate(n, PosetKind::Q);
    CHECK(q.size() == q_size(n).to_u64());
    CHECK(std::is_sorted(q.begin(), q.end()));
    CHECK(enumerate(n, PosetKind::RPlus).size() == binomial(n, n / 2).to_u64());
    CHECK(enumerate(n, PosetKind::RMinus).size() == binomial(n, n / 2).to_u64());
  }
  CHECK(code_of([] { enumerate(25, PosetKind::P); }) == ErrorCode::TooLarge);
}
