#include "partposet/hasse.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace partposet {

HasseDag::HasseDag(PosetKind kind, int n, std::vector<SignVector> nodes, std::vector<std::pair<int, int>> edges)
    : kind_(kind), n_(n), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  rank_of_.reserve(nodes_.size());
  for (const auto& v : nodes_) rank_of_.push_back(rank(v, kind_));
  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  for (auto [a, b] : edges_) {
    out_[static_cast<std::size_t>(a)].push_back(b);
    in_[static_cast<std::size_t>(b)].push_back(a);
  }
}

std::optional<int> HasseDag::index_of(const SignVector& v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

std::vector<SignVector> HasseDag::maximal_nodes() const {
  std::vector<SignVector> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (out_[i].empty()) out.push_back(nodes_[i]);
  }
  return out;
}

std::vector<SignVector> HasseDag::minimal_nodes() const {
  std::vector<SignVector> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (in_[i].empty()) out.push_back(nodes_[i]);
  }
  return out;
}

namespace {

void check_hasse_limit(int n, PosetKind kind, bool force) {
  const int limit = kind == PosetKind::P ? kHasseLimitP : kHasseLimitQ;
  if (n > limit && !force) {
    throw Error(ErrorCode::TooLarge, "Hasse diagram of " + std::string(to_string(kind)) + "(" + std::to_string(n) +
                                         ") exceeds limit n <= " + std::to_string(limit));
  }
}

}  // namespace

HasseDag build_hasse(int n, PosetKind kind, bool force) {
  check_hasse_limit(n, kind, force);
  std::vector<SignVector> nodes = enumerate(n, kind, force);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& w : upper_covers(nodes[i], kind)) {
      const auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
      edges.emplace_back(static_cast<int>(i), static_cast<int>(it - nodes.begin()));
    }
  }
  return HasseDag(kind, n, std::move(nodes), std::move(edges));
}

HasseDag build_hasse_by_reduction(int n, PosetKind kind, bool force) {
  check_hasse_limit(n, kind, force);
  std::vector<SignVector> nodes = enumerate(n, kind, force);
  auto edges = kernels::transitive_reduction(kernels::strict_order_closure(nodes));
  return HasseDag(kind, n, std::move(nodes), std::move(edges));
}

int poset_height(const HasseDag& dag) {
  if (dag.node_count() == 0) return 0;
  // Every edge raises rank by one, so ascending rank is a topological order.
  std::vector<int> order(dag.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dag.rank_of()[static_cast<std::size_t>(a)] < dag.rank_of()[static_cast<std::size_t>(b)]; });
  std::vector<int> longest(dag.node_count(), 1);
  int best = 1;
  for (int v : order) {
    for (int w : dag.successors(v)) {
      auto& lw = longest[static_cast<std::size_t>(w)];
      lw = std::max(lw, longest[static_cast<std::size_t>(v)] + 1);
      best = std::max(best, lw);
    }
  }
  return best;
}

std::size_t max_bipartite_matching(const std::vector<std::vector<int>>& adj, std::size_t right_size) {
  const std::size_t left_size = adj.size();
  constexpr int kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(left_size, kFree);
  std::vector<int> match_right(right_size, kFree);
  std::vector<int> dist(left_size);
  std::size_t matching = 0;

  auto bfs = [&]() {
    std::queue<int> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < left_size; ++u) {
      if (match_left[u] == kFree) {
        dist[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        const int m = match_right[static_cast<std::size_t>(v)];
        if (m == kFree) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(m)] == kInf) {
          dist[static_cast<std::size_t>(m)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(m);
        }
      }
    }
    return reachable_free;
  };

  // Iterative DFS along the BFS layering.
  std::vector<std::size_t> next_edge(left_size);
  auto augment = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      const auto& edges = adj[static_cast<std::size_t>(u)];
      auto& e = next_edge[static_cast<std::size_t>(u)];
      bool advanced = false;
      while (e < edges.size()) {
        const int v = edges[e];
        const int m = match_right[static_cast<std::size_t>(v)];
        if (m == kFree) {
          // Flip the path held on the stack.
          int right = v;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const int left = *it;
            const int prev_right = match_left[static_cast<std::size_t>(left)];
            match_left[static_cast<std::size_t>(left)] = right;
            match_right[static_cast<std::size_t>(right)] = left;
            right = prev_right;
          }
          return true;
        }
        if (dist[static_cast<std::size_t>(m)] == dist[static_cast<std::size_t>(u)] + 1) {
          stack.push_back(m);
          advanced = true;
          break;
        }
        ++e;
      }
      if (!advanced) {
        dist[static_cast<std::size_t>(u)] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++next_edge[static_cast<std::size_t>(stack.back())];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(next_edge.begin(), next_edge.end(), 0);
    for (std::size_t u = 0; u < left_size; ++u) {
      if (match_left[u] == kFree && augment(static_cast<int>(u))) ++matching;
    }
  }
  return matching;
}

int poset_width(const HasseDag& dag) {
  const std::size_t count = dag.node_count();
  if (count == 0) return 0;
  if (count > kWidthNodeLimit) {
    throw Error(ErrorCode::TooLarge, "width computation limited to " + std::to_string(kWidthNodeLimit) + " nodes");
  }
  const auto closure = kernels::strict_order_closure(dag.nodes());
  std::vector<std::vector<int>> adj(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (closure.test(i, j)) adj[i].push_back(static_cast<int>(j));
    }
  }
  // Minimum chain cover = count - maximum matching; equals the width.
  return static_cast<int>(count - max_bipartite_matching(adj, count));
}

}  // namespace partposet
