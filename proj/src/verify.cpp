#include "partposet/verify.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "partposet/core.hpp"
#include "partposet/hasse.hpp"
#include "partposet/poset.hpp"

namespace partposet {

std::string_view to_string(StructureCheck check) {
  switch (check) {
    case StructureCheck::Covers: return "covers";
    case StructureCheck::Iso: return "iso";
    case StructureCheck::Symmetry: return "symmetry";
    case StructureCheck::Chains: return "chains";
    case StructureCheck::Compara: return "compara";
    case StructureCheck::Graded: return "graded";
    case StructureCheck::Extremes: return "extremes";
  }
  return "?";
}

StructureCheck parse_structure_check(std::string_view name) {
  for (auto c : all_structure_checks()) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::UnknownCheck, "unknown check '" + std::string(name) + "'");
}

std::vector<StructureCheck> all_structure_checks() {
  return {StructureCheck::Covers,  StructureCheck::Iso,    StructureCheck::Symmetry, StructureCheck::Chains,
          StructureCheck::Compara, StructureCheck::Graded, StructureCheck::Extremes};
}

int structure_check_limit(StructureCheck check) {
  switch (check) {
    case StructureCheck::Covers:
    case StructureCheck::Iso:
    case StructureCheck::Symmetry: return 10;
    case StructureCheck::Chains:
    case StructureCheck::Compara: return 16;
    case StructureCheck::Graded:
    case StructureCheck::Extremes: return 12;
  }
  return 0;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool StructureReport::all_passed() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

namespace {

CheckResult pass(StructureCheck c, std::string detail) {
  return {std::string(to_string(c)), CheckStatus::Pass, std::move(detail), std::nullopt};
}

CheckResult fail(StructureCheck c, std::string detail, std::string counterexample) {
  return {std::string(to_string(c)), CheckStatus::Fail, std::move(detail), std::move(counterexample)};
}

CheckResult skip(StructureCheck c, std::string detail) {
  return {std::string(to_string(c)), CheckStatus::Skipped, std::move(detail), std::nullopt};
}

std::string edge_text(const HasseDag& dag, std::pair<int, int> e) {
  return dag.nodes()[static_cast<std::size_t>(e.first)].to_string() + " -> " +
         dag.nodes()[static_cast<std::size_t>(e.second)].to_string();
}

CheckResult check_covers(int n, bool force) {
  std::size_t total_edges = 0;
  for (PosetKind kind : {PosetKind::P, PosetKind::Q}) {
    const HasseDag ops = build_hasse(n, kind, force);
    const HasseDag reduced = build_hasse_by_reduction(n, kind, force);
    if (ops.edges() != reduced.edges()) {
      std::vector<std::pair<int, int>> only_ops;
      std::vector<std::pair<int, int>> only_reduced;
      std::set_difference(ops.edges().begin(), ops.edges().end(), reduced.edges().begin(), reduced.edges().end(),
                          std::back_inserter(only_ops));
      std::set_difference(reduced.edges().begin(), reduced.edges().end(), ops.edges().begin(), ops.edges().end(),
                          std::back_inserter(only_reduced));
      std::string ce = std::string(to_string(kind)) + ": ";
      ce += only_ops.empty() ? "missing cover " + edge_text(reduced, only_reduced.front())
                             : "spurious cover " + edge_text(ops, only_ops.front());
      return fail(StructureCheck::Covers, "operator covers differ from transitive reduction", ce);
    }
    total_edges += ops.edge_count();
  }
  return pass(StructureCheck::Covers, std::to_string(total_edges) + " cover edges matched (P and Q)");
}

CheckResult check_iso(int n) {
  const auto all = enumerate(n, PosetKind::P);
  std::vector<SubsetRef> images;
  images.reserve(all.size());
  for (const auto& v : all) images.push_back(iso_f(v));
  // f must be injective; compare as sorted index lists.
  std::set<std::vector<int>> distinct;
  for (const auto& s : images) distinct.insert(s.indices());
  if (distinct.size() != all.size()) {
    return fail(StructureCheck::Iso, "f is not injective", std::to_string(distinct.size()) + " distinct images");
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (leq(all[i], all[j]) != dominance_leq(images[i], images[j])) {
        return fail(StructureCheck::Iso, "order not preserved/reflected",
                    all[i].to_string() + " vs " + all[j].to_string());
      }
    }
  }
  return pass(StructureCheck::Iso, std::to_string(all.size() * all.size()) + " pairs agree");
}

CheckResult check_symmetry(int n) {
  const auto all = enumerate(n, PosetKind::P);
  for (const auto& v : all) {
    if ((membership(v) == PosetKind::Q) != (membership(negate(v)) == PosetKind::Q)) {
      return fail(StructureCheck::Symmetry, "Q not closed under negation", v.to_string());
    }
    for (const auto& w : all) {
      if (leq(v, w) != leq(negate(w), negate(v))) {
        return fail(StructureCheck::Symmetry, "v <= w but not -w <= -v", v.to_string() + " vs " + w.to_string());
      }
    }
  }
  return pass(StructureCheck::Symmetry, std::to_string(all.size() * all.size()) + " pairs agree");
}

CheckResult check_chains(int n) {
  if (n < 4) return skip(StructureCheck::Chains, "requires n >= 4");
  const Extremes e = extremes(n);
  int pairs = 0;
  for (int k = 0; k <= e.ell; ++k) {
    for (int kp = 0; kp <= e.ell; ++kp) {
      if (k == kp) continue;
      const auto& lo = e.minimal[static_cast<std::size_t>(k)];
      const auto& hi = e.maximal[static_cast<std::size_t>(kp)];
      if (membership(lo) != PosetKind::Q || membership(hi) != PosetKind::Q || !strictly_less(lo, hi)) {
        return fail(StructureCheck::Chains, "-m_k not below m_k'",
                    "k=" + std::to_string(k) + " k'=" + std::to_string(kp));
      }
      ++pairs;
    }
  }
  return pass(StructureCheck::Chains, std::to_string(pairs) + " ordered pairs");
}

CheckResult check_compara(int n) {
  if (n < 3) return skip(StructureCheck::Compara, "Q(n) is empty for n < 3");
  const Extremes e = extremes(n);
  const auto all = enumerate(n, PosetKind::P);
  const std::size_t expected = all.size() / 2;
  for (int k = 0; k <= e.ell; ++k) {
    const auto& lo = e.minimal[static_cast<std::size_t>(k)];
    std::size_t above = 0;
    for (const auto& v : all) {
      const bool up = leq(lo, v);
      above += up ? 1 : 0;
      if (!up && !leq(lo, negate(v))) {
        return fail(StructureCheck::Compara, "-m_k below neither v nor -v",
                    "k=" + std::to_string(k) + " v=" + v.to_string());
      }
    }
    if (above != expected) {
      return fail(StructureCheck::Compara, "wrong up-set size",
                  "k=" + std::to_string(k) + " count=" + std::to_string(above));
    }
  }
  return pass(StructureCheck::Compara,
              std::to_string(e.ell + 1) + " minimal elements each below " + std::to_string(expected) + " vectors");
}

CheckResult check_graded(int n, bool force) {
  if (n < 3) return skip(StructureCheck::Graded, "Q(n) is empty for n < 3");
  const HasseDag dag = build_hasse_by_reduction(n, PosetKind::Q, force);
  for (auto [a, b] : dag.edges()) {
    const auto& v = dag.nodes()[static_cast<std::size_t>(a)];
    const auto& w = dag.nodes()[static_cast<std::size_t>(b)];
    if (p_rank(w) != p_rank(v) + 1) {
      return fail(StructureCheck::Graded, "Q cover skips a rank", edge_text(dag, {a, b}));
    }
  }
  return pass(StructureCheck::Graded, std::to_string(dag.edge_count()) + " Q covers raise rank by 1");
}

CheckResult check_extremes(int n, bool force) {
  if (n < 3) return skip(StructureCheck::Extremes, "Q(n) is empty for n < 3");
  const HasseDag dag = build_hasse(n, PosetKind::Q, force);
  const Extremes e = extremes(n);
  auto sorted = [](std::vector<SignVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(e.maximal) != dag.maximal_nodes()) {
    return fail(StructureCheck::Extremes, "maximal elements differ from m_k",
                std::to_string(dag.maximal_nodes().size()) + " maximal nodes in diagram");
  }
  if (sorted(e.minimal) != dag.minimal_nodes()) {
    return fail(StructureCheck::Extremes, "minimal elements differ from -m_k",
                std::to_string(dag.minimal_nodes().size()) + " minimal nodes in diagram");
  }
  return pass(StructureCheck::Extremes, std::to_string(e.ell + 1) + " maximal and minimal elements");
}

}  // namespace

StructureReport verify_structure(int n, const std::vector<StructureCheck>& checks, bool force) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n >= kMaxLength) throw Error(ErrorCode::TooLarge, "n must be below 64");
  for (auto c : checks) {
    if (n > structure_check_limit(c) && !force) {
      throw Error(ErrorCode::TooLarge, "check '" + std::string(to_string(c)) + "' is limited to n <= " +
                                           std::to_string(structure_check_limit(c)));
    }
  }
  StructureReport report;
  report.n = n;
  for (auto c : checks) {
    switch (c) {
      case StructureCheck::Covers: report.results.push_back(check_covers(n, force)); break;
      case StructureCheck::Iso: report.results.push_back(check_iso(n)); break;
      case StructureCheck::Symmetry: report.results.push_back(check_symmetry(n)); break;
      case StructureCheck::Chains: report.results.push_back(check_chains(n)); break;
      case StructureCheck::Compara: report.results.push_back(check_compara(n)); break;
      case StructureCheck::Graded: report.results.push_back(check_graded(n, force)); break;
      case StructureCheck::Extremes: report.results.push_back(check_extremes(n, force)); break;
    }
  }
  return report;
}

}  // namespace partposet
