#pragma once

// Structural predicates for the extremal characterizations, all by direct
// search on the adjacency masks.

#include <bit>
#include <cstddef>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace::harness {

inline bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.row(v) != (low_mask(g.order()) & ~bit(v))) return false;
  return true;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// K_{1,n-1} with n >= 2 (K_2 counts).
inline bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

// A path P_m on m + 1 vertices; K_1 is P_0.
inline bool is_path(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1 && max_degree(g) <= 2;
}

inline bool is_forest(const Graph& g) { return g.size() + components(g) == g.order(); }

// m independent edges plus isolated vertices.
inline bool is_matching_plus_isolated(const Graph& g) { return max_degree(g) <= 1; }

// Number of parts if g is complete multipartite (non-adjacency is an
// equivalence relation), else 0. The null graph has 0 parts.
inline std::size_t complete_multipartite_parts(const Graph& g) {
  const VertexMask all = low_mask(g.order());
  VertexMask seen = 0;
  std::size_t parts = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen & bit(v)) continue;
    const VertexMask part = all & ~g.row(v);
    bool ok = true;
    for_each_vertex(part, [&](Vertex u) { ok = ok && (all & ~g.row(u)) == part; });
    if (!ok) return 0;
    seen |= part;
    ++parts;
  }
  return parts;
}

// A complete tripartite graph (classes may be empty, so complete bipartite
// and edgeless graphs count) together with isolated vertices.
inline bool is_complete_tripartite_plus_isolated(const Graph& g) {
  const Graph core = induced_subgraph(g, ~isolated_vertices(g));
  if (core.order() == 0) return true;
  const std::size_t parts = complete_multipartite_parts(core);
  return parts >= 1 && parts <= 3;
}

// Classes of closed twins (N[u] = N[v]) and the quotient graph on them.
struct TwinQuotient {
  std::vector<VertexMask> classes;
  Graph quotient;
};

inline TwinQuotient closed_twin_quotient(const Graph& g) {
  TwinQuotient out;
  std::vector<std::size_t> class_of(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexMask closed = g.row(v) | bit(v);
    std::size_t c = 0;
    while (c < out.classes.size()) {
      const Vertex rep = static_cast<Vertex>(std::countr_zero(out.classes[c]));
      if ((g.row(rep) | bit(rep)) == closed) break;
      ++c;
    }
    if (c == out.classes.size()) out.classes.push_back(0);
    out.classes[c] |= bit(v);
    class_of[v] = c;
  }
  out.quotient = Graph(out.classes.size());
  for (const Edge& e : g.edges())
    if (class_of[e.u] != class_of[e.v]) out.quotient.add_edge(class_of[e.u], class_of[e.v]);
  return out;
}

// A solid path of length len >= 2: cliques substituted into the vertices of
// P_len. The closed-twin classes are then exactly the cliques.
inline bool is_solid_path(const Graph& g, std::size_t len) {
  if (len < 2 || !is_connected(g) || g.order() == 0) return false;
  const Graph q = closed_twin_quotient(g).quotient;
  return q.order() == len + 1 && is_path(q);
}

// A solid P_2-graph that is not complete: two cliques sharing some but not
// all of their vertices.
inline bool is_incomplete_solid_p2(const Graph& g) { return is_solid_path(g, 2); }

// F_0 = 0, F_1 = 1.
inline BigInt fibonacci(std::size_t k) {
  BigInt a = 0;
  BigInt b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

}  // namespace interlace::harness
