#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "partposet/core.hpp"
#include "partposet/kernels.hpp"
#include "partposet/poset.hpp"

namespace partposet {

inline constexpr int kHasseLimitP = 14;
inline constexpr int kHasseLimitQ = 16;
inline constexpr std::size_t kWidthNodeLimit = 5000;

/// Explicit cover graph of one of the posets for a fixed n. Nodes are in
/// ascending bitmask order; an edge (a, b) means nodes[b] covers nodes[a].
/// rank_of holds the P-rank of each node.
class HasseDag {
 public:
  HasseDag(PosetKind kind, int n, std::vector<SignVector> nodes, std::vector<std::pair<int, int>> edges);

  PosetKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  const std::vector<SignVector>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& rank_of() const noexcept { return rank_of_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<int> index_of(const SignVector& v) const;
  const std::vector<int>& successors(int node) const { return out_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& predecessors(int node) const { return in_[static_cast<std::size_t>(node)]; }

  /// Nodes with no outgoing / incoming edge.
  std::vector<SignVector> maximal_nodes() const;
  std::vector<SignVector> minimal_nodes() const;

 private:
  PosetKind kind_;
  int n_;
  std::vector<SignVector> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> rank_of_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Nodes from enumerate(); edges from operator covers filtered by
/// membership. Throws TooLarge above the per-kind limit unless forced.
HasseDag build_hasse(int n, PosetKind kind, bool force = false);

/// Same node set, edges from the brute-force transitive reduction of the
/// prefix-sum order (no operator knowledge). Used as a cross-check.
HasseDag build_hasse_by_reduction(int n, PosetKind kind, bool force = false);

/// 1 + longest path length (0 for an empty poset).
int poset_height(const HasseDag& dag);

/// Exact maximum antichain size: |nodes| minus a maximum matching in the
/// strict-comparability bipartite graph (Dilworth). Throws TooLarge above
/// kWidthNodeLimit nodes.
int poset_width(const HasseDag& dag);

/// Maximum bipartite matching (Hopcroft-Karp) for adjacency lists from a
/// left side of size adj.size() into a right side of size right_size.
std::size_t max_bipartite_matching(const std::vector<std::vector<int>>& adj, std::size_t right_size);

}  // namespace partposet
