#include "partposet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "partposet/counting.hpp"
#include "partposet/kernels.hpp"
#include "partposet/solver.hpp"
#include "partposet/verify.hpp"

namespace partposet::cli {

using nlohmann::json;

std::vector<std::int64_t> parse_instance_text(std::string_view text) {
  std::vector<std::int64_t> values;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\f\v");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (tok.size() > 1 && tok[0] == '-' && std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
        throw Error(ErrorCode::NegativeValue, "line " + std::to_string(line_no) + ": '" + tok + "' is negative");
      }
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": '" + tok + "' is not a decimal integer");
      }
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorCode::Overflow, "line " + std::to_string(line_no) + ": '" + tok + "' exceeds 63 bits");
      }
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": cannot parse '" + tok + "'");
      }
      values.push_back(v);
    }
  }
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "instance file has no values");
  return values;
}

std::string hasse_to_dot(const HasseDag& dag) {
  std::ostringstream os;
  os << "digraph \"" << to_string(dag.kind()) << "(" << dag.n() << ")\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  std::map<int, std::vector<int>> levels;
  for (std::size_t i = 0; i < dag.node_count(); ++i) levels[dag.rank_of()[i]].push_back(static_cast<int>(i));
  for (const auto& [r, members] : levels) {
    os << "  { rank=same; /* rank " << r << " */";
    for (int i : members) os << " \"" << dag.nodes()[static_cast<std::size_t>(i)].to_string() << "\";";
    os << " }\n";
  }
  for (auto [a, b] : dag.edges()) {
    os << "  \"" << dag.nodes()[static_cast<std::size_t>(a)].to_string() << "\" -> \""
       << dag.nodes()[static_cast<std::size_t>(b)].to_string() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json counts_json(const std::vector<BigCount>& counts) {
  json arr = json::array();
  for (const auto& c : counts) arr.push_back(c.to_string());
  return arr;
}

std::string join_counts(const std::vector<BigCount>& counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ' ';
    s += counts[i].to_string();
  }
  return s;
}

std::string subset_text(const SubsetRef& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s.indices()[i]);
  }
  return out + "]";
}

// --- solve -----------------------------------------------------------------

int cmd_solve(const std::string& file, const std::string& algo, bool as_json, std::ostream& out) {
  const auto raw = parse_instance_text(read_input(file));
  const Instance inst = normalize_instance(raw);
  const Solution sol = solve(inst, algo);
  if (as_json) {
    json j = {{"command", "solve"},       {"n", inst.size()},
              {"total", inst.total},      {"algo", sol.algorithm},
              {"abs_delta", sol.abs_delta}, {"delta", sol.delta},
              {"subset", sol.subset.indices()}, {"nodes_visited", sol.nodes_visited},
              {"optimal", sol.optimal}};
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << inst.size() << "\n"
        << "total: " << inst.total << "\n"
        << "algorithm: " << sol.algorithm << "\n"
        << "abs_delta: " << sol.abs_delta << "\n"
        << "delta: " << sol.delta << "\n"
        << "subset: " << subset_text(sol.subset) << "\n"
        << "nodes_visited: " << sol.nodes_visited << "\n";
  }
  return kExitOk;
}

// --- profile ---------------------------------------------------------------

constexpr int kDiagramHeightLimit = 12;

int cmd_profile(int n, const std::string& poset, bool as_json, std::ostream& out) {
  if (n < 1 || n > kCountingLimit) {
    throw Error(ErrorCode::TooLarge, "n must lie in [1, " + std::to_string(kCountingLimit) + "]");
  }
  const PosetKind kind = parse_poset_kind(poset);
  const RankProfile prof = rank_profile(n, kind);
  const ProfileChecks checks = profile_checks(prof);
  const BigCount size = poset_size(n, kind);
  const BigCount formula_width = width_value(n);
  std::int64_t height = 0;
  if (kind == PosetKind::P || n >= 3) height = height_formula(n, kind);
  std::optional<int> diagram_height;
  if (n <= kDiagramHeightLimit) diagram_height = poset_height(build_hasse(n, kind));

  if (as_json) {
    json j = {{"command", "profile"},
              {"poset", std::string(to_string(kind))},
              {"n", n},
              {"size", size.to_string()},
              {"profile", counts_json(prof.counts)},
              {"width", {{"max_level", checks.max_level.to_string()}, {"formula", formula_width.to_string()}}},
              {"height", {{"formula", height}, {"diagram", diagram_height ? json(*diagram_height) : json(nullptr)}}},
              {"symmetric", checks.symmetric},
              {"unimodal", checks.unimodal}};
    out << j.dump(2) << "\n";
  } else {
    out << "poset: " << to_string(kind) << "(" << n << ")\n"
        << "size: " << size.to_string() << "\n"
        << "profile: " << join_counts(prof.counts) << "\n"
        << "width: " << checks.max_level.to_string() << " (max level), " << formula_width.to_string()
        << " (formula)\n"
        << "height: " << height << " (formula)";
    if (diagram_height) out << ", " << *diagram_height << " (diagram)";
    out << "\n"
        << "symmetric: " << (checks.symmetric ? "true" : "false") << "\n"
        << "unimodal: " << (checks.unimodal ? "true" : "false") << "\n";
  }
  return kExitOk;
}

// --- hasse -----------------------------------------------------------------

int cmd_hasse(int n, const std::string& poset, const std::string& out_path, bool force, std::ostream& out,
              std::ostream& err) {
  const PosetKind kind = parse_poset_kind(poset);
  if (force) err << "warning: --force lifts the diagram size guard; output may be very large\n";
  const HasseDag dag = build_hasse(n, kind, force);
  const std::string dot = hasse_to_dot(dag);
  if (out_path.empty()) {
    out << dot;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
  file << dot;
  out << "wrote " << to_string(kind) << "(" << n << "): " << dag.node_count() << " nodes, " << dag.edge_count()
      << " edges to " << out_path << "\n";
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

// Checks beyond the structural ones.
constexpr std::string_view kProfileCheck = "profile";
constexpr std::string_view kUnimodalCheck = "unimodal";
constexpr std::string_view kSolversCheck = "solvers";
constexpr int kProfileEnumerationLimit = 14;
constexpr int kSolversLimit = 16;
constexpr int kSolverSamples = 20;

std::vector<std::string> extra_check_names() {
  return {std::string(kProfileCheck), std::string(kUnimodalCheck), std::string(kSolversCheck)};
}

int extra_check_limit(std::string_view name) { return name == kSolversCheck ? kSolversLimit : kCountingLimit; }

CheckResult check_profile(int n) {
  CheckResult r{std::string(kProfileCheck), CheckStatus::Pass, "", std::nullopt};
  const RankProfile p = p_rank_profile(n);
  const RankProfile plus = rplus_rank_profile(n);
  const RankProfile minus = rminus_rank_profile(n);
  const RankProfile q = q_rank_profile(n);
  auto fail = [&](std::string detail, std::string ce) {
    r.status = CheckStatus::Fail;
    r.detail = std::move(detail);
    r.counterexample = std::move(ce);
    return r;
  };
  if (q.total() != q_size(n)) return fail("Q profile total differs from closed form", q.total().to_string());
  if (plus.total() != ballot_count(n)) return fail("R+ profile total differs from C(n, n/2)", plus.total().to_string());
  for (std::size_t i = 0; i < p.counts.size(); ++i) {
    const int qi = static_cast<int>(i) - n;
    const BigCount qc = (qi >= 0 && static_cast<std::size_t>(qi) < q.counts.size()) ? q.counts[static_cast<std::size_t>(qi)] : BigCount{};
    if (qc + plus.counts[i] + minus.counts[i] != p.counts[i]) return fail("P != Q + R+ + R-", "rank " + std::to_string(i));
  }
  if (!profile_checks(p).symmetric) return fail("P profile not symmetric", "");
  if (!profile_checks(q).symmetric) return fail("Q profile not symmetric", "");
  if (profile_checks(p).max_level != width_value(n)) return fail("P max level differs from width value", "");
  std::string detail = "totals, conservation and symmetry hold";
  if (n <= kProfileEnumerationLimit) {
    const auto hp = kernels::rank_histogram(n, PosetKind::P);
    const auto hq = kernels::rank_histogram(n, PosetKind::Q);
    for (std::size_t i = 0; i < hp.size(); ++i) {
      if (BigCount(hp[i]) != p.counts[i]) return fail("P profile differs from enumeration", "rank " + std::to_string(i));
      const int qi = static_cast<int>(i) - n;
      const BigCount qc = (qi >= 0 && static_cast<std::size_t>(qi) < q.counts.size()) ? q.counts[static_cast<std::size_t>(qi)] : BigCount{};
      if (BigCount(hq[i]) != qc) return fail("Q profile differs from enumeration", "P-rank " + std::to_string(i));
    }
    detail += "; matches enumeration";
  }
  r.detail = detail;
  return r;
}

CheckResult check_unimodal(int n) {
  const bool p_ok = profile_checks(p_rank_profile(n)).unimodal;
  const bool q_ok = profile_checks(q_rank_profile(n)).unimodal;
  CheckResult r{std::string(kUnimodalCheck), CheckStatus::Pass, "P and Q profiles are rank-unimodal", std::nullopt};
  if (!p_ok || !q_ok) {
    r.status = CheckStatus::Fail;
    r.detail = "profile is not rank-unimodal";
    r.counterexample = !p_ok ? "P(" + std::to_string(n) + ")" : "Q(" + std::to_string(n) + ")";
  }
  return r;
}

CheckResult check_solvers(int n, std::uint64_t seed) {
  CheckResult r{std::string(kSolversCheck), CheckStatus::Pass, "", std::nullopt};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> value(0, 1000);
  int fast_fired = 0;
  for (int t = 0; t < kSolverSamples; ++t) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(n));
    for (auto& x : raw) x = value(rng);
    const Instance inst = normalize_instance(raw);
    const Solution ref = solve_brute(inst);
    std::vector<Solution> others{solve_dp(inst)};
    if (n >= 3) {
      others.push_back(solve_q_enum(inst));
      others.push_back(solve_pruned(inst));
      if (auto s = solve_min_fastpath(inst)) {
        others.push_back(*s);
        ++fast_fired;
      }
      if (auto s = solve_corollary(inst)) {
        others.push_back(*s);
        ++fast_fired;
      }
    }
    for (const auto& s : others) {
      if (s.abs_delta != ref.abs_delta || s.abs_delta % 2 != inst.total % 2) {
        std::string ce = s.algorithm + " gave " + std::to_string(s.abs_delta) + ", brute " +
                         std::to_string(ref.abs_delta) + " on {";
        for (std::size_t i = 0; i < raw.size(); ++i) ce += (i ? "," : "") + std::to_string(raw[i]);
        r.status = CheckStatus::Fail;
        r.detail = "solver disagreement";
        r.counterexample = ce + "}";
        return r;
      }
    }
  }
  r.detail = std::to_string(kSolverSamples) + " random instances agree (fast paths fired " + std::to_string(fast_fired) +
             " times)";
  return r;
}

int cmd_verify(int n, const std::string& check_list, bool as_json, bool force, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  if (n < 1 || n >= kMaxLength) throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 63]");
  const bool all = check_list == "all";
  std::vector<std::string> names;
  if (all) {
    for (auto c : all_structure_checks()) names.emplace_back(to_string(c));
    for (auto& e : extra_check_names()) names.push_back(e);
  } else {
    std::stringstream ss(check_list);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) names.push_back(name);
    }
    if (names.empty()) throw Error(ErrorCode::UnknownCheck, "no checks requested");
  }
  // Validate every name and limit before running anything.
  std::vector<std::pair<std::string, int>> plan;
  for (const auto& name : names) {
    const auto extras = extra_check_names();
    const bool extra = std::find(extras.begin(), extras.end(), name) != extras.end();
    const int limit = extra ? extra_check_limit(name) : structure_check_limit(parse_structure_check(name));
    plan.emplace_back(name, limit);
    if (!all && n > limit && !force) {
      throw Error(ErrorCode::TooLarge, "check '" + name + "' is limited to n <= " + std::to_string(limit));
    }
  }
  if (force) err << "warning: --force lifts per-check size guards\n";

  std::vector<CheckResult> results;
  for (const auto& [name, limit] : plan) {
    if (n > limit && !force) {
      results.push_back({name, CheckStatus::Skipped, "n exceeds limit " + std::to_string(limit), std::nullopt});
      continue;
    }
    if (name == kProfileCheck) {
      results.push_back(check_profile(n));
    } else if (name == kUnimodalCheck) {
      results.push_back(check_unimodal(n));
    } else if (name == kSolversCheck) {
      results.push_back(check_solvers(n, seed));
    } else {
      auto rep = verify_structure(n, {parse_structure_check(name)}, force);
      results.push_back(rep.results.front());
    }
  }
  const bool passed =
      std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });

  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name},
                     {"status", std::string(to_string(r.status))},
                     {"detail", r.detail},
                     {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}});
    }
    out << json{{"command", "verify"}, {"n", n}, {"passed", passed}, {"checks", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << r.name << ": " << to_string(r.status);
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
      if (r.counterexample) out << "  counterexample: " << *r.counterexample << "\n";
    }
    out << (passed ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Posets of sign vectors and exact number partitioning", "partposet"};
  app.require_subcommand(1);

  std::string file;
  std::string algo = "auto";
  bool as_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a partition instance read from a file ('-' for stdin)");
  solve_cmd->add_option("file", file, "Instance file")->required();
  solve_cmd->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember(algorithm_names()));
  solve_cmd->add_flag("--json", as_json, "Emit JSON");

  int n = 0;
  std::string poset = "P";
  auto* profile_cmd = app.add_subcommand("profile", "Rank profile, size, width and height of P(n) or Q(n)");
  profile_cmd->add_option("n", n, "Vector length")->required();
  profile_cmd->add_option("--poset", poset, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  profile_cmd->add_flag("--json", as_json, "Emit JSON");

  std::string out_path;
  bool force = false;
  auto* hasse_cmd = app.add_subcommand("hasse", "Write the Hasse diagram of P(n) or Q(n) as DOT");
  hasse_cmd->add_option("n", n, "Vector length")->required();
  hasse_cmd->add_option("--poset", poset, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  hasse_cmd->add_option("--out", out_path, "Output path (default: stdout)");
  hasse_cmd->add_flag("--force", force, "Lift the diagram size guard");

  std::string checks = "all";
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run structural, counting and solver checks for one n");
  verify_cmd->add_option("n", n, "Vector length")->required();
  verify_cmd->add_option("--checks", checks, "Comma-separated check names or 'all'");
  verify_cmd->add_option("--seed", seed, "Seed for the random solver instances");
  verify_cmd->add_flag("--json", as_json, "Emit JSON");
  verify_cmd->add_flag("--force", force, "Lift per-check size guards");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, algo, as_json, out);
    if (*profile_cmd) return cmd_profile(n, poset, as_json, out);
    if (*hasse_cmd) return cmd_hasse(n, poset, out_path, force, out, err);
    if (*verify_cmd) return cmd_verify(n, checks, as_json, force, seed, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace partposet::cli
