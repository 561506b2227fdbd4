#pragma once

// Exhaustive checks of the pivot and interlace-polynomial identities over
// all labeled graphs of small order, plus seeded random checks of the
// substitution, duplication, multiplication and rotation formulas.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "interlace/closed_forms.hpp"
#include "interlace/graph.hpp"
#include "interlace/harness/enumeration.hpp"
#include "interlace/harness/parallel.hpp"
#include "interlace/harness/predicates.hpp"
#include "interlace/harness/report.hpp"
#include "interlace/harness/table.hpp"
#include "interlace/interlace.hpp"
#include "interlace/polynomial.hpp"
#include "interlace/substitution.hpp"

namespace interlace::harness {

// True iff v = (-1)^n (-2)^k for some k >= 0.
inline bool is_signed_minus_two_power(std::int64_t v, std::size_t n) {
  if (v == 0) return false;
  const std::uint64_t mag = static_cast<std::uint64_t>(v < 0 ? -v : v);
  if (!std::has_single_bit(mag)) return false;
  const int k = std::countr_zero(mag);
  const bool negative = ((n + static_cast<std::size_t>(k)) % 2) == 1;
  return (v < 0) == negative;
}

inline std::string small_str(const SmallPoly& p) { return to_string(to_polynomial(p)); }

// Every property of one graph that can be read off the table. q(G - v) and
// q(G^{ab} - b) come from the order n - 1 table.
inline void check_graph_entry(const PolynomialTable& table, std::size_t n, GraphCode code,
                              const std::vector<GraphCode>& keep, MemoCache& cache,
                              VerificationReport& r) {
  const Graph g = graph_from_code(n, code);
  const SmallPoly& q = table.at(n, code);
  auto fail = [&](const std::string& what) { r.fail(g, what + "; q = " + small_str(q)); };
  auto expect = [&](bool ok, const char* what) {
    ++r.checked;
    if (!ok) fail(what);
  };

  // The recursion itself, against the table.
  expect(to_small(interlace_polynomial(g, cache)) == q, "recursion disagrees with table");

  const int deg = small_degree(q);
  const std::vector<VertexMask> comps = component_masks(g);
  expect(evaluate_small(q, 2) == (std::int64_t{1} << n), "q(2) != 2^n");
  expect(small_lowest_degree(q) == static_cast<int>(comps.size()),
         "lowest degree != number of components");
  expect(deg <= static_cast<int>(n), "deg q > n");
  expect((deg == static_cast<int>(n)) == g.is_edgeless(), "deg q = n iff edgeless fails");
  expect(deg >= static_cast<int>(independence_number(g)), "deg q < independence number");
  expect((q[0] == 0) == (n >= 1), "constant term is not 0 iff n >= 1");
  expect(is_signed_minus_two_power(evaluate_small(q, -1), n), "q(-1) != (-1)^n (-2)^k");
  if (is_forest(g)) {
    expect(deg == static_cast<int>(n - matching_number(g)), "forest: deg q != n - matching");
  }
  for (Vertex v = 0; v < n; ++v) {
    const SmallPoly& qv = table.at(n - 1, detail::compress_bits(code, keep[v]));
    expect(small_degree(qv) <= deg, "deg q(G - v) > deg q(G)");
  }
  if (comps.size() > 1) {
    IntPolynomial product{1};
    for (VertexMask c : comps) product *= to_polynomial(table.at(induced_subgraph(g, c)));
    expect(product == to_polynomial(q), "q is not the product over components");
  }

  const bool connected = comps.size() <= 1;
  for (const Edge& e : g.edges()) {
    const Vertex a = e.u;
    const Vertex b = e.v;
    const Graph gab = pivot(g, a, b);
    const Graph gba = pivot(g, b, a);
    const GraphCode cab = graph_code(gab);
    expect(pivot(gab, a, b) == g, "pivot is not an involution");
    expect(gab == gba, "pivot(a,b) != pivot(b,a)");
    expect(gab.row(a) == g.row(a) && gab.row(b) == g.row(b),
           "pivot changed the neighborhood of a or b");
    if (connected) expect(is_connected(gab), "pivot disconnected a connected graph");
    expect(table.at(n, cab) == q, "q(G^{ab}) != q(G)");
    // Both orientations of the reduction.
    for (int side = 0; side < 2; ++side) {
      const Vertex x = side == 0 ? a : b;
      const Vertex y = side == 0 ? b : a;
      const SmallPoly sum = table.at(n - 1, detail::compress_bits(code, keep[x])) +
                            table.at(n - 1, detail::compress_bits(cab, keep[y]));
      ++r.checked;
      if (sum != q) {
        fail("reduction on (" + std::to_string(x) + "," + std::to_string(y) + ") gives " +
             small_str(sum));
      }
    }
  }
}

// All labeled graphs of order 1..n_max (n_max <= table order).
inline VerificationReport check_graph_identities(const PolynomialTable& table, std::size_t n_max,
                                                 std::size_t jobs = 1) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "graph-identities";
  r.n_max = n_max;
  if (n_max > table.n_max()) {
    throw Error(ErrorCode::kTooLarge, "table does not reach order " + std::to_string(n_max));
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<GraphCode> keep(n);
    for (Vertex v = 0; v < n; ++v) keep[v] = pairs_avoiding(n, v);
    parallel_check(graph_count(n), jobs, r,
                   [&](std::uint64_t begin, std::uint64_t end, VerificationReport& part) {
                     MemoCache cache(kCheckCacheEntries);
                     for (GraphCode code = begin; code < end; ++code)
                       check_graph_entry(table, n, code, keep, cache, part);
                   });
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// For distinct a, b, c with ab, ac edges:
//   (i)  G^{(ab)(ac)(ab)} = G_{bc},   (ii) G^{(ab)(ac)} = (G^{ac})_{bc}.
inline VerificationReport check_pivot_lemma(std::size_t n_max, std::size_t jobs = 1) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "pivot-lemma";
  r.n_max = n_max;
  for (std::size_t n = 3; n <= n_max; ++n) {
    parallel_check(graph_count(n), jobs, r,
                   [&](std::uint64_t begin, std::uint64_t end, VerificationReport& part) {
                     for (GraphCode code = begin; code < end; ++code) {
                       const Graph g = graph_from_code(n, code);
                       for (Vertex a = 0; a < n; ++a) {
                         for_each_vertex(g.row(a), [&](Vertex b) {
                           for_each_vertex(g.row(a) & ~bit(b), [&](Vertex c) {
                             const Graph ab_ac = pivot(pivot(g, a, b), a, c);
                             const std::string at = " at (a,b,c) = (" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(c) +
                                                    ")";
                             part.expect(pivot(ab_ac, a, b) == label_swap(g, b, c), g,
                                         "G^{(ab)(ac)(ab)} != G_{bc}" + at);
                             part.expect(ab_ac == label_swap(pivot(g, a, c), b, c), g,
                                         "G^{(ab)(ac)} != (G^{ac})_{bc}" + at);
                           });
                         });
                       }
                     }
                   });
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// deg q = n - matching number on every recursive tree of order <= max_order
// (which covers every tree shape).
inline VerificationReport check_forests(std::size_t max_order) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "forest-degree";
  r.n_max = max_order;
  MemoCache cache(kCheckCacheEntries);
  for (std::size_t n = 1; n <= max_order; ++n) {
    for_each_recursive_tree(n, [&](const Graph& t) {
      const IntPolynomial q = interlace_polynomial(t, cache);
      r.expect(q.degree() == static_cast<std::ptrdiff_t>(n - matching_number(t)), t,
               "tree: deg q = " + std::to_string(q.degree()) + " but n - matching = " +
                   std::to_string(n - matching_number(t)));
    });
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// q_G(x) <= q_H(x) at x = 1, 2, 3 for random rotations (G, H).
inline VerificationReport check_rotations(std::size_t samples, std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "rotation";
  r.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const Graph g = random_graph(n, rng);
    const Vertex u = uniform_below(rng, n);
    Vertex v = uniform_below(rng, n - 1);
    if (v >= u) ++v;
    const Graph h = rotate(g, u, v);
    const IntPolynomial qg = interlace_polynomial(g);
    const IntPolynomial qh = interlace_polynomial(h);
    for (int x = 1; x <= 3; ++x) {
      r.expect(evaluate(qg, x) <= evaluate(qh, x), g,
               "rotation on (" + std::to_string(u) + "," + std::to_string(v) + ") at x = " +
                   std::to_string(x) + ": q_G = " + to_string(qg) + ", q_H = " + to_string(qh));
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// Clique substitution, vertex duplication and vertex multiplication
// formulas against the recursion on the constructed graph.
inline VerificationReport check_substitution(std::size_t samples, std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "substitution";
  r.seed = seed;
  Rng rng(seed);
  MemoCache cache(kCheckCacheEntries);
  for (std::size_t i = 0; i < samples; ++i) {
    {
      const std::size_t n = 1 + uniform_below(rng, 6);
      SubstitutionSpec spec{random_graph(n, rng), {}};
      std::size_t delta = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t m = 1 + uniform_below(rng, 3);
        delta += m - 1;
        spec.parts.emplace_back(CliquePart{m});
      }
      const IntPolynomial expect =
          q_of_clique_substitution(interlace_polynomial(spec.pattern, cache), delta);
      r.expect(interlace_polynomial(substitute(spec), cache) == expect, spec.pattern,
               "clique substitution formula fails");
    }
    {
      const std::size_t n = 1 + uniform_below(rng, 8);
      const Graph g = random_graph(n, rng);
      const Vertex a = uniform_below(rng, n);
      const IntPolynomial expect = q_of_vertex_duplication(
          interlace_polynomial(g, cache), interlace_polynomial(remove_vertex(g, a), cache));
      r.expect(interlace_polynomial(duplicate_vertex(g, a), cache) == expect, g,
               "duplication formula fails at vertex " + std::to_string(a));
    }
    {
      const std::size_t n = 1 + uniform_below(rng, 5);
      const Graph g = random_graph(n, rng);
      std::vector<std::size_t> ks(n);
      for (std::size_t& k : ks) k = 1 + uniform_below(rng, 3);
      r.expect(interlace_polynomial(multiply_vertices(g, ks), cache) ==
                   q_of_vertex_multiplication(g, ks, cache),
               g, "vertex multiplication formula fails");
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace interlace::harness
