#pragma once

// Graph substitution G[G_1, ..., G_n], vertex duplication and multiplication,
// rotations, and the interlace-polynomial identities that go with them.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"
#include "interlace/interlace.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

struct CliquePart {
  std::size_t size = 0;
};
struct EdgelessPart {
  std::size_t size = 0;
};
using SubstitutionPart = std::variant<CliquePart, EdgelessPart, Graph>;

// One replacement per template vertex. Empty parts are allowed.
struct SubstitutionSpec {
  Graph pattern;
  std::vector<SubstitutionPart> parts;
};

inline Graph part_graph(const SubstitutionPart& part) {
  if (const auto* c = std::get_if<CliquePart>(&part)) return complete_graph(c->size);
  if (const auto* e = std::get_if<EdgelessPart>(&part)) return edgeless_graph(e->size);
  return std::get<Graph>(part);
}

// Vertices of part i occupy a contiguous block, blocks in template order.
inline Graph substitute(const SubstitutionSpec& spec) {
  if (spec.parts.size() != spec.pattern.order()) {
    throw Error(ErrorCode::kOutOfRange,
                "substitution needs one part per template vertex (" +
                    std::to_string(spec.pattern.order()) + "), got " +
                    std::to_string(spec.parts.size()));
  }
  Graph result;
  std::vector<VertexMask> blocks;
  for (const SubstitutionPart& part : spec.parts) {
    const std::size_t start = result.order();
    result = disjoint_union(result, part_graph(part));
    blocks.push_back(low_mask(result.order()) & ~low_mask(start));
  }
  for (const Edge& e : spec.pattern.edges()) {
    for_each_vertex(blocks[e.u], [&](Vertex x) { result.mutable_row(x) |= blocks[e.v]; });
    for_each_vertex(blocks[e.v], [&](Vertex y) { result.mutable_row(y) |= blocks[e.u]; });
  }
  return result;
}

// q(G[K_{m_1}, ..., K_{m_n}]) = q(G) 2^{|G*| - |G|}; size_delta = |G*| - |G|.
inline IntPolynomial q_of_clique_substitution(const IntPolynomial& template_q,
                                              std::size_t size_delta) {
  return template_q * (BigInt(1) << size_delta);
}

// G o a: a gets a twin a' (same neighbors, not adjacent to a), appended last.
inline Graph duplicate_vertex(const Graph& g, Vertex a) {
  const VertexMask nbrs = g.neighbors(a);
  Graph out = disjoint_union(g, Graph(1));
  const Vertex twin = g.order();
  for_each_vertex(nbrs, [&](Vertex v) { out.add_edge(twin, v); });
  return out;
}

// q(G o a) = (1 + x) q(G) - x q(G - a).
inline IntPolynomial q_of_vertex_duplication(const IntPolynomial& q_g,
                                             const IntPolynomial& q_g_minus_a) {
  return IntPolynomial{1, 1} * q_g - shift_mul_x(q_g_minus_a);
}

// G[k_1, ..., k_n]: vertex i replaced by k_i independent copies.
inline Graph multiply_vertices(const Graph& g, const std::vector<std::size_t>& multiplicities) {
  SubstitutionSpec spec{g, {}};
  for (std::size_t k : multiplicities) spec.parts.emplace_back(EdgelessPart{k});
  return substitute(spec);
}

inline constexpr std::size_t kVertexMultiplicationOrderLimit = 14;

// q(G[k_1, ..., k_n]) from the 2^n induced subgraphs of G:
//   sum over l in {0,1}^n of (-1)^{n + |l|} q(G[l]) prod_i (x^{1-l_i} + ... + x^{k_i-1}).
inline IntPolynomial q_of_vertex_multiplication(const Graph& g,
                                                const std::vector<std::size_t>& multiplicities,
                                                MemoCache& cache) {
  const std::size_t n = g.order();
  if (multiplicities.size() != n) {
    throw Error(ErrorCode::kOutOfRange, "need one multiplicity per vertex");
  }
  if (n > kVertexMultiplicationOrderLimit) {
    throw Error(ErrorCode::kTooLarge,
                "vertex multiplication formula is limited to order " +
                    std::to_string(kVertexMultiplicationOrderLimit));
  }
  for (std::size_t k : multiplicities)
    if (k < 1) throw Error(ErrorCode::kOutOfStatedRange, "multiplicities must be >= 1");
  IntPolynomial total;
  for (VertexMask chosen = 0; chosen <= low_mask(n); ++chosen) {
    IntPolynomial factor{1};
    for (Vertex i = 0; i < n && !factor.is_zero(); ++i) {
      const bool kept = (chosen & bit(i)) != 0;
      factor *= IntPolynomial::geometric_block(kept ? 0 : 1,
                                               static_cast<std::ptrdiff_t>(multiplicities[i]) - 1);
    }
    if (factor.is_zero()) continue;
    IntPolynomial term = factor * interlace_polynomial(induced_subgraph(g, chosen), cache);
    const std::size_t sign_exponent = n + static_cast<std::size_t>(std::popcount(chosen));
    if (sign_exponent % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

inline IntPolynomial q_of_vertex_multiplication(const Graph& g,
                                                const std::vector<std::size_t>& multiplicities) {
  MemoCache cache;
  return q_of_vertex_multiplication(g, multiplicities, cache);
}

// The H of a rotation (G, H): uv toggled, plus a new pendant vertex w = |G|
// joined to u only.
inline Graph rotate(const Graph& g, Vertex u, Vertex v) {
  detail::check_distinct_pair(g, u, v);
  Graph h = disjoint_union(g, Graph(1));
  h.toggle_edge(u, v);
  h.add_edge(u, g.order());
  return h;
}

}  // namespace interlace
