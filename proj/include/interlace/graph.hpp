#pragma once

// Simple undirected graphs of order at most 64 with bitmask adjacency rows,
// plus the pivot operator and the structural operations built on it.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

using Vertex = std::size_t;
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxOrder = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(std::size_t n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Calls f(v) for every vertex whose bit is set, in increasing order.
template <typename F>
inline void for_each_vertex(VertexMask mask, F&& f) {
  while (mask != 0) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled simple graph. Row v holds the neighbor mask of vertex v; rows past
// the order are always zero, so defaulted equality is exact labeled equality.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t order) : order_(static_cast<std::uint32_t>(order)) {
    if (order > kMaxOrder) {
      throw Error(ErrorCode::kTooLarge,
                  "graph order " + std::to_string(order) + " exceeds 64");
    }
  }

  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  std::size_t order() const { return order_; }
  bool empty() const { return order_ == 0; }
  VertexMask vertices() const { return low_mask(order_); }

  VertexMask neighbors(Vertex v) const {
    check_vertex(v);
    return rows_[v];
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] & bit(v)) != 0;
  }

  std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(std::popcount(neighbors(v)));
  }

  // Number of edges.
  std::size_t size() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < order_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  bool is_edgeless() const {
    for (std::size_t v = 0; v < order_; ++v)
      if (rows_[v] != 0) return false;
    return true;
  }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  void toggle_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] ^= bit(v);
    rows_[v] ^= bit(u);
  }

  // Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u) {
      for_each_vertex(rows_[u] & ~low_mask(u + 1),
                      [&](Vertex v) { out.push_back({u, v}); });
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  // Unchecked row access for the hot paths inside this library.
  VertexMask row(Vertex v) const { return rows_[v]; }
  VertexMask& mutable_row(Vertex v) { return rows_[v]; }

 private:
  void check_vertex(Vertex v) const {
    if (v >= order_) {
      throw Error(ErrorCode::kOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph of order " +
                      std::to_string(order_));
    }
  }

  void check_pair(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw Error(ErrorCode::kOutOfRange,
                  "loops are not allowed (vertex " + std::to_string(u) + ")");
    }
  }

  std::uint32_t order_ = 0;
  std::array<VertexMask, kMaxOrder> rows_{};
};

// A graph together with, for each of its vertices, the index that vertex had
// in the graph it was extracted from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
};

namespace detail {

inline void check_distinct_pair(const Graph& g, Vertex a, Vertex b) {
  if (a >= g.order() || b >= g.order()) {
    throw Error(ErrorCode::kOutOfRange,
                "pair (" + std::to_string(a) + "," + std::to_string(b) +
                    ") not in graph of order " + std::to_string(g.order()));
  }
  if (a == b) {
    throw Error(ErrorCode::kOutOfRange,
                "pair needs two distinct vertices, got " + std::to_string(a));
  }
}

// Removes bit v from a row and shifts the higher bits down by one.
inline VertexMask squeeze_out(VertexMask row, Vertex v) {
  const VertexMask below = row & low_mask(v);
  const VertexMask above = v + 1 >= 64 ? 0 : (row >> (v + 1)) << v;
  return below | above;
}

// Packs the bits of `row` selected by `keep` into the low bits.
inline VertexMask compress_bits(VertexMask row, VertexMask keep) {
  VertexMask out = 0;
  std::size_t k = 0;
  for_each_vertex(keep, [&](Vertex v) {
    if (row & bit(v)) out |= bit(k);
    ++k;
  });
  return out;
}

// The pivot G^{ab} without the edge check, for callers that took ab from
// the edge set. Vertices other than a and b are split by adjacency to a only,
// to b only, or to both; every pair drawn from two different classes is
// toggled.
inline Graph pivot_unchecked(const Graph& g, Vertex a, Vertex b) {
  const VertexMask na = g.row(a) & ~bit(b);
  const VertexMask nb = g.row(b) & ~bit(a);
  const VertexMask both = na & nb;
  const VertexMask only_a = na & ~nb;
  const VertexMask only_b = nb & ~na;
  Graph out = g;
  for_each_vertex(only_a, [&](Vertex x) { out.mutable_row(x) ^= only_b | both; });
  for_each_vertex(only_b, [&](Vertex x) { out.mutable_row(x) ^= only_a | both; });
  for_each_vertex(both, [&](Vertex x) { out.mutable_row(x) ^= only_a | only_b; });
  return out;
}

}  // namespace detail

// G^{ab}; ab must be an edge of G.
inline Graph pivot(const Graph& g, Vertex a, Vertex b) {
  detail::check_distinct_pair(g, a, b);
  if (!g.has_edge(a, b)) {
    throw Error(ErrorCode::kNotAnEdge, "cannot pivot on non-edge (" +
                                           std::to_string(a) + "," +
                                           std::to_string(b) + ")");
  }
  return detail::pivot_unchecked(g, a, b);
}

// G_{ab}: the same graph with the labels of a and b exchanged.
inline Graph label_swap(const Graph& g, Vertex a, Vertex b) {
  detail::check_distinct_pair(g, a, b);
  Graph out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexMask r = g.row(v);
    const bool has_a = (r & bit(a)) != 0;
    const bool has_b = (r & bit(b)) != 0;
    r &= ~(bit(a) | bit(b));
    if (has_a) r |= bit(b);
    if (has_b) r |= bit(a);
    const Vertex target = v == a ? b : (v == b ? a : v);
    out.mutable_row(target) = r;
  }
  return out;
}

// Induced subgraph on `keep`, vertices renumbered in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  Graph out(static_cast<std::size_t>(std::popcount(keep)));
  std::size_t k = 0;
  for_each_vertex(keep, [&](Vertex v) {
    out.mutable_row(k++) = detail::compress_bits(g.row(v), keep);
  });
  return out;
}

// G - v with indices compacted; no index map, for the recursion hot path.
inline Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " not in graph of order " +
                    std::to_string(g.order()));
  }
  Graph out(g.order() - 1);
  std::size_t k = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    out.mutable_row(k++) = detail::squeeze_out(g.row(u), v);
  }
  return out;
}

inline Subgraph delete_vertex(const Graph& g, Vertex v) {
  Subgraph s{remove_vertex(g, v), {}};
  s.original.reserve(g.order() - 1);
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) s.original.push_back(u);
  return s;
}

inline Subgraph induced_subgraph_mapped(const Graph& g, VertexMask keep) {
  Subgraph s{induced_subgraph(g, keep), {}};
  for_each_vertex(keep & g.vertices(), [&](Vertex v) { s.original.push_back(v); });
  return s;
}

// Vertices of `second` follow those of `first`.
inline Graph disjoint_union(const Graph& first, const Graph& second) {
  const std::size_t n1 = first.order();
  if (n1 + second.order() > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge, "disjoint union exceeds order 64");
  }
  Graph out(n1 + second.order());
  for (Vertex v = 0; v < n1; ++v) out.mutable_row(v) = first.row(v);
  for (Vertex v = 0; v < second.order(); ++v)
    out.mutable_row(n1 + v) = second.row(v) << n1;
  return out;
}

// Vertex masks of the connected components, ordered by smallest vertex.
inline std::vector<VertexMask> component_masks(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.row(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

inline std::size_t components(const Graph& g) { return component_masks(g).size(); }

// The null graph counts as connected.
inline bool is_connected(const Graph& g) { return components(g) <= 1; }

inline VertexMask isolated_vertices(const Graph& g) {
  VertexMask out = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.row(v) == 0) out |= bit(v);
  return out;
}

inline constexpr std::size_t kBruteForceOrderLimit = 24;

namespace detail {

inline std::size_t max_independent(const Graph& g, VertexMask candidates) {
  if (candidates == 0) return 0;
  // Vertices with no neighbor among the candidates always join.
  std::size_t free_count = 0;
  Vertex branch = 0;
  int best_degree = -1;
  VertexMask rest = candidates;
  for_each_vertex(candidates, [&](Vertex v) {
    const int d = std::popcount(g.row(v) & candidates);
    if (d == 0) {
      ++free_count;
      rest &= ~bit(v);
    } else if (d > best_degree) {
      best_degree = d;
      branch = v;
    }
  });
  if (rest == 0) return free_count;
  const std::size_t without = max_independent(g, rest & ~bit(branch));
  const std::size_t with = 1 + max_independent(g, rest & ~bit(branch) & ~g.row(branch));
  return free_count + std::max(without, with);
}

inline std::size_t max_matching(const Graph& g, VertexMask alive) {
  // Lowest vertex with a live neighbor is either unmatched or matched to one
  // of those neighbors.
  VertexMask scan = alive;
  while (scan != 0) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(scan));
    scan &= scan - 1;
    const VertexMask nbrs = g.row(v) & alive;
    if (nbrs == 0) continue;
    std::size_t best = max_matching(g, alive & ~bit(v));
    for_each_vertex(nbrs, [&](Vertex u) {
      best = std::max(best, 1 + max_matching(g, alive & ~bit(v) & ~bit(u)));
    });
    return best;
  }
  return 0;
}

inline void check_brute_force_order(const Graph& g, const char* what) {
  if (g.order() > kBruteForceOrderLimit) {
    throw Error(ErrorCode::kTooLarge,
                std::string(what) + " is limited to order " +
                    std::to_string(kBruteForceOrderLimit) + ", got " +
                    std::to_string(g.order()));
  }
}

}  // namespace detail

// Exact alpha(G) by exhaustive branching; order <= 24.
inline std::size_t independence_number(const Graph& g) {
  detail::check_brute_force_order(g, "independence_number");
  return detail::max_independent(g, g.vertices());
}

// Exact mu(G) by exhaustive branching; order <= 24.
inline std::size_t matching_number(const Graph& g) {
  detail::check_brute_force_order(g, "matching_number");
  return detail::max_matching(g, g.vertices());
}

// ---------------------------------------------------------------------------
// Standard families. Paths are indexed by edge count: path_graph(n) has n + 1
// vertices, so path_graph(0) is a single vertex.

inline Graph edgeless_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.mutable_row(v) = low_mask(n) & ~bit(v);
  return g;
}

inline Graph complete_multipartite_graph(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (std::size_t p : parts) n += p;
  Graph g(n);
  std::vector<VertexMask> part_mask;
  std::size_t start = 0;
  for (std::size_t p : parts) {
    part_mask.push_back(low_mask(start + p) & ~low_mask(start));
    start += p;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for_each_vertex(part_mask[i], [&](Vertex v) {
      g.mutable_row(v) = low_mask(n) & ~part_mask[i];
    });
  return g;
}

inline Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  return complete_multipartite_graph({m, n});
}

// K_{1,n}: centre 0, leaves 1..n.
inline Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

inline Graph path_graph(std::size_t edges) {
  Graph g(edges + 1);
  for (Vertex v = 0; v < edges; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kOutOfStatedRange, "cycles need n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Rim 0..spokes-1 in cyclic order, hub last.
inline Graph wheel_graph(std::size_t spokes) {
  Graph g = disjoint_union(cycle_graph(spokes), Graph(1));
  for (Vertex v = 0; v < spokes; ++v) g.add_edge(v, spokes);
  return g;
}

}  // namespace interlace
