#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "interlace/closed_forms.hpp"
#include "interlace/graph_io.hpp"
#include "interlace/interlace.hpp"
#include "interlace/substitution.hpp"

namespace interlace {
namespace {

using P = IntPolynomial;
using Matrix = std::vector<std::vector<bool>>;
using Coeffs = std::vector<long long>;

// Plain recursion on an adjacency matrix with machine-integer coefficients.
// Reduces on the last edge in lexicographic order, unlike the library.
Coeffs naive_q(const Matrix& adj) {
  const std::size_t n = adj.size();
  int ea = -1, eb = -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj[i][j]) ea = static_cast<int>(i), eb = static_cast<int>(j);
  if (ea < 0) {
    Coeffs c(n + 1, 0);
    c[n] = 1;
    return c;
  }
  auto without = [&](const Matrix& m, std::size_t v) {
    Matrix out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      std::vector<bool> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != v) row.push_back(m[i][j]);
      out.push_back(row);
    }
    return out;
  };
  const auto a = static_cast<std::size_t>(ea), b = static_cast<std::size_t>(eb);
  Matrix piv = adj;
  auto cls = [&](std::size_t x) {
    if (x == a || x == b) return 0;
    return (adj[x][a] ? 1 : 0) + (adj[x][b] ? 2 : 0);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && cls(x) && cls(y) && cls(x) != cls(y)) piv[x][y] = !piv[x][y];
  Coeffs left = naive_q(without(adj, a));
  const Coeffs right = naive_q(without(piv, b));
  left.resize(std::max(left.size(), right.size()), 0);
  for (std::size_t k = 0; k < right.size(); ++k) left[k] += right[k];
  return left;
}

P naive_q(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order()));
  for (const Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  const Coeffs c = naive_q(m);
  std::vector<BigInt> big(c.begin(), c.end());
  return P(std::move(big));
}

Graph random_graph(std::size_t n, std::mt19937_64& rng, unsigned density = 2) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng() % density == 0) g.add_edge(i, j);
  return g;
}

TEST(Interlace, Examples) {
  EXPECT_EQ(interlace_polynomial(edgeless_graph(3)), P({0, 0, 0, 1}));
  EXPECT_EQ(interlace_polynomial(complete_graph(4)), P({0, 8}));
  EXPECT_EQ(interlace_polynomial(star_graph(3)), P({0, 2, 1, 1}));
  EXPECT_EQ(interlace_polynomial(cycle_graph(5)), P({0, 6, 5}));
  EXPECT_EQ(interlace_polynomial(Graph(0)), P({1}));
}

TEST(Interlace, MatchesNaiveRecursion) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng() % 9, rng, 1 + rng() % 3);
    EXPECT_EQ(interlace_polynomial(g), naive_q(g)) << to_edge_list(g);
  }
}

TEST(Interlace, Evaluations) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(interlace_at(complete_graph(n), 1), BigInt(1) << (n - 1));
    EXPECT_EQ(interlace_at(edgeless_graph(n), 1), BigInt(1));
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng() % 12;
    EXPECT_EQ(interlace_at(random_graph(n, rng), 2), BigInt(1) << n);
  }
}

TEST(Interlace, CacheAgreesWithFreshComputation) {
  std::mt19937_64 rng(3);
  MemoCache shared;
  MemoCache tiny(4);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng() % 11, rng);
    const P fresh = interlace_polynomial(g);
    EXPECT_EQ(interlace_polynomial(g, shared), fresh);
    EXPECT_EQ(interlace_polynomial(g, shared), fresh);
    EXPECT_EQ(interlace_polynomial(g, tiny), fresh);
    EXPECT_LE(tiny.size(), 4u);
  }
  EXPECT_GT(shared.hits(), 0u);
}

TEST(Interlace, PivotReductionOnEveryEdge) {
  std::mt19937_64 rng(4);
  MemoCache cache;
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(2 + rng() % 8, rng);
    const P q = interlace_polynomial(g, cache);
    for (const Edge& e : g.edges()) {
      EXPECT_EQ(pivot_reduction(g, e.u, e.v, cache), q);
      EXPECT_EQ(pivot_reduction(g, e.v, e.u, cache), q);
      EXPECT_EQ(interlace_polynomial(pivot(g, e.u, e.v), cache), q);
    }
  }
}

TEST(Interlace, Multiplicative) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph a = random_graph(rng() % 7, rng);
    const Graph b = random_graph(rng() % 7, rng);
    EXPECT_EQ(interlace_polynomial(disjoint_union(a, b)),
              interlace_polynomial(a) * interlace_polynomial(b));
  }
}

TEST(Interlace, ReductionEdgeHeuristic) {
  EXPECT_FALSE(reduction_edge(edgeless_graph(3)).has_value());
  const Graph p = path_graph(3);
  const Edge e = *reduction_edge(p);
  EXPECT_EQ(e, (Edge{0, 1}));
  Graph g = complete_graph(4);
  g.remove_edge(0, 3);
  g.remove_edge(1, 3);
  EXPECT_EQ(*reduction_edge(g), (Edge{3, 2}));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(closed_form_complete_bipartite(2, 2), P({0, 2, 3}));
  EXPECT_EQ(closed_form_complete_bipartite(1, 1), P({0, 2}));
  EXPECT_EQ(closed_form_edgeless(5), power_of_x(5));
  EXPECT_EQ(closed_form_path(3), P({0, 2, 3}));
  EXPECT_EQ(closed_form_path(2), P({0, 2, 1}));
  EXPECT_EQ(closed_form_path(0), P({0, 1}));
  EXPECT_EQ(closed_form_cycle(3), P({0, 4}));
  EXPECT_EQ(closed_form_cycle(4), P({0, 2, 3}));
  EXPECT_EQ(closed_form_cycle(5), P({0, 6, 5}));
  EXPECT_EQ(closed_form_star(3), P({0, 2, 1, 1}));
}

TEST(ClosedForms, PathRecurrenceAndFibonacci) {
  BigInt f0 = 1, f1 = 2;  // F_2, F_3
  for (std::size_t n = 2; n <= 15; ++n) {
    EXPECT_EQ(closed_form_path(n), closed_form_path(n - 1) + shift_mul_x(closed_form_path(n - 2)));
    const BigInt f2 = f0 + f1;
    EXPECT_EQ(evaluate(closed_form_path(n), 1), f2);
    f0 = f1;
    f1 = f2;
  }
}

TEST(ClosedForms, AgreeWithRecursion) {
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_EQ(closed_form_cycle(n), interlace_polynomial(cycle_graph(n)));
    EXPECT_EQ(closed_form_path(n), interlace_polynomial(path_graph(n)));
  }
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      EXPECT_EQ(closed_form_complete_bipartite(m, n),
                interlace_polynomial(complete_bipartite_graph(m, n)));
  EXPECT_EQ(q_complete_multipartite({2, 2}), P({0, 2, 3}));
  EXPECT_EQ(q_complete_multipartite({5}), power_of_x(5));
  EXPECT_EQ(q_complete_multipartite({1, 1, 1, 1}), P({0, 8}));
  EXPECT_EQ(q_complete_multipartite({1, 2, 3}), interlace_polynomial(complete_multipartite_graph({1, 2, 3})));
}

TEST(ClosedForms, StatedRanges) {
  EXPECT_THROW(closed_form_star(1), Error);
  EXPECT_THROW(closed_form_complete_bipartite(0, 2), Error);
  EXPECT_THROW(closed_form_cycle(2), Error);
  EXPECT_THROW(closed_form_complete(0), Error);
  EXPECT_THROW(q_complete_multipartite({}), Error);
}

TEST(Substitution, Examples) {
  SubstitutionSpec p2{path_graph(2), {CliquePart{2}, CliquePart{1}, CliquePart{3}}};
  const Graph solid = substitute(p2);
  EXPECT_EQ(solid.order(), 6u);
  EXPECT_EQ(interlace_polynomial(solid), q_of_clique_substitution(interlace_polynomial(path_graph(2)), 3));
  SubstitutionSpec k22{complete_graph(2), {EdgelessPart{2}, EdgelessPart{2}}};
  EXPECT_EQ(substitute(k22), complete_bipartite_graph(2, 2));
  const Graph c5 = cycle_graph(5);
  SubstitutionSpec same{c5, std::vector<SubstitutionPart>(5, CliquePart{1})};
  EXPECT_EQ(substitute(same), c5);
  SubstitutionSpec empty_part{path_graph(2), {CliquePart{1}, EdgelessPart{0}, CliquePart{1}}};
  EXPECT_EQ(substitute(empty_part), edgeless_graph(2));
  SubstitutionSpec bad{path_graph(2), {CliquePart{1}}};
  EXPECT_THROW(substitute(bad), Error);
}

TEST(Substitution, CliqueIntoSingleVertex) {
  for (std::size_t n = 1; n <= 6; ++n) {
    SubstitutionSpec s{Graph(1), {CliquePart{n}}};
    EXPECT_EQ(interlace_polynomial(substitute(s)),
              q_of_clique_substitution(interlace_polynomial(Graph(1)), n - 1));
  }
  EXPECT_EQ(q_of_clique_substitution(P({0, 2, 1}), 0), P({0, 2, 1}));
}

TEST(Substitution, SolidP2SecondMaximum) {
  // Solid P_2-graphs with parts summing to n have q(1) = (3/4) 2^{n-1}.
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t c = 1; c <= 3; ++c) {
        const std::size_t n = a + b + c;
        const Graph g = substitute({path_graph(2), {CliquePart{a}, CliquePart{b}, CliquePart{c}}});
        EXPECT_EQ(4 * interlace_at(g, 1), 3 * (BigInt(1) << (n - 1)));
      }
}

TEST(Duplication, Examples) {
  EXPECT_EQ(q_of_vertex_duplication(P({0, 2}), P({0, 1})), P({0, 2, 1}));
  EXPECT_EQ(interlace_polynomial(duplicate_vertex(complete_graph(2), 0)), P({0, 2, 1}));
  EXPECT_EQ(q_of_vertex_duplication(P({0, 1}), P({1})), P({0, 0, 1}));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = random_graph(n, rng);
    const Vertex a = rng() % n;
    EXPECT_EQ(interlace_polynomial(duplicate_vertex(g, a)),
              q_of_vertex_duplication(interlace_polynomial(g), interlace_polynomial(remove_vertex(g, a))));
  }
}

TEST(Multiplication, Examples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(q_of_vertex_multiplication(c4, {1, 1, 1, 1}), interlace_polynomial(c4));
  EXPECT_EQ(q_of_vertex_multiplication(complete_graph(2), {2, 2}), P({0, 2, 3}));
  const Graph star = star_graph(3);
  EXPECT_EQ(q_of_vertex_multiplication(star, {2, 1, 3, 2}),
            interlace_polynomial(multiply_vertices(star, {2, 1, 3, 2})));
  EXPECT_THROW(q_of_vertex_multiplication(star, {1, 1}), Error);
  EXPECT_THROW(q_of_vertex_multiplication(star, {1, 0, 1, 1}), Error);
  EXPECT_THROW(q_of_vertex_multiplication(Graph(15), std::vector<std::size_t>(15, 1)), Error);
}

TEST(Rotation, Examples) {
  // Smallest case: G = E_2, so uv becomes an edge and H is the path w-u-v.
  const Graph g = edgeless_graph(2);
  const Graph h = rotate(g, 0, 1);
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(interlace_polynomial(h), P({0, 2, 1}));
  EXPECT_EQ(interlace_polynomial(g), P({0, 0, 1}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 8;
    const Graph a = random_graph(n, rng);
    const Vertex u = rng() % n;
    const Vertex v = (u + 1 + rng() % (n - 1)) % n;
    const Graph b = rotate(a, u, v);
    ASSERT_EQ(b.order(), n + 1);
    EXPECT_NE(a.has_edge(u, v), b.has_edge(u, v));
    const P qa = interlace_polynomial(a), qb = interlace_polynomial(b);
    for (long long x = 1; x <= 4; ++x) EXPECT_LE(evaluate(qa, x), evaluate(qb, x));
  }
  EXPECT_THROW(rotate(g, 1, 1), Error);
}

}  // namespace
}  // namespace interlace
