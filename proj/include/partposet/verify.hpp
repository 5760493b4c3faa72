#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partposet {

/// Structural checks on P(n) / Q(n), each run exhaustively for one n.
enum class StructureCheck {
  Covers,    // operator covers == brute-force transitive reduction (P and Q)
  Iso,       // f is an order isomorphism onto dominance-ordered M(n)
  Symmetry,  // v <= w iff -w <= -v; Q closed under negation
  Chains,    // -m_k strictly below m_k' for all k != k' (n >= 4)
  Compara,   // each -m_k is below exactly 2^(n-1) vectors, one of every +-pair
  Graded,    // every Q cover raises P-rank by exactly 1
  Extremes,  // formula m_k / -m_k == maximal / minimal nodes of the Q diagram
};

std::string_view to_string(StructureCheck check);
/// Throws UnknownCheck.
StructureCheck parse_structure_check(std::string_view name);
std::vector<StructureCheck> all_structure_checks();
/// Largest n the check accepts without force.
int structure_check_limit(StructureCheck check);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct StructureReport {
  int n = 0;
  std::vector<CheckResult> results;

  bool all_passed() const;
};

/// Runs the requested checks in the given order. Throws TooLarge if n
/// exceeds a requested check's limit (unless force) and InvalidArgument for
/// n < 1.
StructureReport verify_structure(int n, const std::vector<StructureCheck>& checks, bool force = false);

}  // namespace partposet
