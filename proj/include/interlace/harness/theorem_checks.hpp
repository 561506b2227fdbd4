#pragma once

// Closed forms, published example values, the extremal bounds on q(G; 1)
// with their equality cases, and the unimodality conjecture.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "interlace/closed_forms.hpp"
#include "interlace/graph.hpp"
#include "interlace/graph_io.hpp"
#include "interlace/harness/enumeration.hpp"
#include "interlace/harness/parallel.hpp"
#include "interlace/harness/predicates.hpp"
#include "interlace/harness/report.hpp"
#include "interlace/harness/table.hpp"
#include "interlace/interlace.hpp"
#include "interlace/polynomial.hpp"

namespace interlace::harness {

inline void expect_polynomial(VerificationReport& r, const Graph& g, const std::string& name,
                              const IntPolynomial& actual, const IntPolynomial& expected) {
  r.expect(actual == expected, g,
           name + ": q = " + to_string(actual) + ", expected " + to_string(expected));
}

// Compositions of `total` into positive parts.
inline void for_each_composition(std::size_t total,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (std::size_t k = 1; k <= left; ++k) {
      parts.push_back(k);
      self(self, left - k);
      parts.pop_back();
    }
  };
  rec(rec, total);
}

// The recursion against every closed form at the stated scales.
inline VerificationReport check_closed_forms() {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "closed-forms";
  MemoCache cache(kCheckCacheEntries);
  auto q = [&](const Graph& g) { return interlace_polynomial(g, cache); };
  for (std::size_t n = 0; n <= 10; ++n) {
    expect_polynomial(r, edgeless_graph(n), "E_" + std::to_string(n), q(edgeless_graph(n)),
                      closed_form_edgeless(n));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    expect_polynomial(r, complete_graph(n), "K_" + std::to_string(n), q(complete_graph(n)),
                      closed_form_complete(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    expect_polynomial(r, star_graph(n), "K_{1," + std::to_string(n) + "}", q(star_graph(n)),
                      closed_form_star(n));
  }
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const Graph g = complete_bipartite_graph(m, n);
      expect_polynomial(r, g, "K_{" + std::to_string(m) + "," + std::to_string(n) + "}", q(g),
                        closed_form_complete_bipartite(m, n));
    }
  }
  for (std::size_t total = 1; total <= 8; ++total) {
    for_each_composition(total, [&](const std::vector<std::size_t>& parts) {
      const Graph g = complete_multipartite_graph(parts);
      std::string name = "K(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        name += (i ? "," : "") + std::to_string(parts[i]);
      expect_polynomial(r, g, name + ")", q(g), q_complete_multipartite(parts));
    });
  }
  for (std::size_t n = 0; n <= 12; ++n) {
    expect_polynomial(r, path_graph(n), "P_" + std::to_string(n), q(path_graph(n)),
                      closed_form_path(n));
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    expect_polynomial(r, cycle_graph(n), "C_" + std::to_string(n), q(cycle_graph(n)),
                      closed_form_cycle(n));
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// q(P_n; 1) = F_{n+2} for paths with n edges.
inline VerificationReport check_fibonacci(std::size_t max_edges) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "fibonacci";
  r.n_max = max_edges + 1;
  for (std::size_t n = 0; n <= max_edges; ++n) {
    const Graph p = path_graph(n);
    const BigInt value = interlace_at(p, 1);
    r.expect(value == fibonacci(n + 2), p,
             "P_" + std::to_string(n) + ": q(1) = " + value.str() + ", F_" +
                 std::to_string(n + 2) + " = " + fibonacci(n + 2).str());
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// Trees given as 1-based edge lists.
inline Graph graph_from_one_based(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& es) {
  Graph g(n);
  for (const auto& [u, v] : es) g.add_edge(u - 1, v - 1);
  return g;
}

// The two order-9 trees sharing a polynomial: the path 1..7 with branches
// 3-8 and 5-9, and the path 1..6 with branches 4-7-8 and 5-9.
inline Graph order_nine_tree_a() {
  return graph_from_one_based(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 8}, {5, 9}});
}

inline Graph order_nine_tree_b() {
  return graph_from_one_based(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}, {7, 8}, {5, 9}});
}

// Published example values.
inline VerificationReport check_reference_vectors() {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "reference-vectors";
  MemoCache cache(kCheckCacheEntries);
  auto q = [&](const Graph& g) { return interlace_polynomial(g, cache); };

  const IntPolynomial six_five{0, 6, 5};
  Graph chorded = cycle_graph(5);
  chorded.add_edge(0, 2);
  expect_polynomial(r, cycle_graph(5), "C_5", q(cycle_graph(5)), six_five);
  expect_polynomial(r, chorded, "C_5 plus a chord", q(chorded), six_five);

  const IntPolynomial tree_q{0, 2, 9, 17, 13, 4};
  expect_polynomial(r, order_nine_tree_a(), "tree with branches 3-8, 5-9", q(order_nine_tree_a()),
                    tree_q);
  expect_polynomial(r, order_nine_tree_b(), "tree with branches 4-7-8, 5-9",
                    q(order_nine_tree_b()), tree_q);

  // The wheel with four spokes is K(1,2,2) and meets the size bound; removing
  // a rim edge raises q(1) from 9 to 11.
  const Graph wheel = wheel_graph(4);
  Graph cut = wheel;
  cut.remove_edge(0, 1);
  expect_polynomial(r, wheel, "W_4", q(wheel), IntPolynomial{0, 4, 4, 1});
  expect_polynomial(r, cut, "W_4 minus a rim edge", q(cut), six_five);
  r.expect(evaluate(q(wheel), 1) == 9 && evaluate(q(cut), 1) == 11, wheel,
           "wheel pair: expected q(1) = 9 and 11");
  r.expect(evaluate(q(wheel), 1) == BigInt(wheel.size() + 1) &&
               is_complete_tripartite_plus_isolated(wheel),
           wheel, "W_4 should meet q(1) = e + 1 as a complete tripartite graph");

  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      const Graph g = disjoint_union(complete_graph(m), complete_graph(n - m));
      expect_polynomial(r, g, "K_" + std::to_string(m) + " + K_" + std::to_string(n - m), q(g),
                        IntPolynomial::monomial(BigInt(1) << (n - 2), 2));
    }
  }

  expect_polynomial(r, complete_graph(4), "K_4", q(complete_graph(4)), IntPolynomial{0, 8});
  expect_polynomial(r, cycle_graph(3), "C_3", q(cycle_graph(3)), IntPolynomial{0, 4});
  expect_polynomial(r, edgeless_graph(3), "E_3", q(edgeless_graph(3)), IntPolynomial{0, 0, 0, 1});
  r.expect(evaluate(q(complete_graph(5)), 1) == 16, complete_graph(5), "K_5: q(1) != 16");
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// Bounds on q(G; 1) and the degree, each with its equality case, for one
// graph of order n with polynomial q.
inline void check_extremal_entry(const Graph& g, const SmallPoly& q, VerificationReport& r) {
  const std::size_t n = g.order();
  const std::size_t e = g.size();
  const std::int64_t q1 = evaluate_small(q, 1);
  const std::string at = "q = " + to_string(to_polynomial(q)) + ": ";
  auto expect = [&](bool ok, const std::string& what) { r.expect(ok, g, at + what); };
  auto as_int = [](const BigInt& v) { return v.convert_to<std::int64_t>(); };

  expect(q1 >= 1 && ((q1 == 1) == g.is_edgeless()), "q(1) >= 1 with equality iff edgeless");
  if (small_degree(q) == 1) expect(is_complete(g), "purely linear q but not complete");

  // Size: e + 1 <= q(1) <= prod over components F_{e_i + 2} <= 2^e.
  expect(q1 >= static_cast<std::int64_t>(e) + 1, "q(1) < e + 1");
  expect((q1 == static_cast<std::int64_t>(e) + 1) == is_complete_tripartite_plus_isolated(g),
         "q(1) = e + 1 iff complete tripartite plus isolated vertices fails");
  std::int64_t product = 1;
  for (VertexMask c : component_masks(g))
    product *= as_int(fibonacci(induced_subgraph(g, c).size() + 2));
  expect(q1 <= product, "q(1) > product of F_{e_i + 2}");
  if (is_connected(g) && n > 0) {
    expect(q1 <= as_int(fibonacci(e + 2)), "connected: q(1) > F_{e + 2}");
    expect((q1 == as_int(fibonacci(e + 2))) == is_path(g),
           "connected: q(1) = F_{e + 2} iff path fails");
  }
  expect(q1 <= (std::int64_t{1} << e), "q(1) > 2^e");
  expect((q1 == (std::int64_t{1} << e)) == is_matching_plus_isolated(g),
         "q(1) = 2^e iff matching plus isolated vertices fails");

  // Order: n <= q(1) without isolated vertices; q(1) <= 2^{n-1}.
  if (n > 0 && isolated_vertices(g) == 0) {
    expect(q1 >= static_cast<std::int64_t>(n), "no isolated vertices but q(1) < n");
    const bool two_k2 = n == 4 && is_matching_plus_isolated(g);
    expect((q1 == static_cast<std::int64_t>(n)) == (is_star(g) || two_k2),
           "q(1) = n iff star or 2K_2 fails");
  }
  if (n > 0) {
    const std::int64_t top = std::int64_t{1} << (n - 1);
    expect(q1 <= top, "q(1) > 2^{n-1}");
    expect((q1 == top) == is_complete(g), "q(1) = 2^{n-1} iff complete fails");
    if (n >= 3 && !is_complete(g)) {
      const std::int64_t second = 3 * (std::int64_t{1} << (n - 3));
      expect(q1 <= second, "incomplete graph with q(1) > (3/4) 2^{n-1}");
      expect((q1 == second) == is_incomplete_solid_p2(g),
             "q(1) = (3/4) 2^{n-1} iff incomplete solid P_2 fails");
    }
  }

  // Nonzero terms. The published two-term characterization is only
  // half right: a solid P_2 or P_3 component with complete companions gives
  // two terms, but so do C_4, C_5 and many other graphs. What survives of the
  // converse is that exactly one component is incomplete.
  const std::size_t terms = small_nonzero_terms(q);
  std::size_t solid = 0;
  std::size_t incomplete = 0;
  for (VertexMask c : component_masks(g)) {
    const Graph part = induced_subgraph(g, c);
    if (is_complete(part)) continue;
    ++incomplete;
    solid += is_solid_path(part, 2) || is_solid_path(part, 3);
  }
  if (incomplete == 1 && solid == 1) {
    expect(terms == 2, "solid P_2/P_3 with complete companions but not two nonzero terms");
  }
  if (terms == 2) expect(incomplete == 1, "two nonzero terms but not exactly one incomplete component");
  if (n >= 3 && terms == n - 1) {
    SmallPoly star{};
    star[1] = 2;
    for (std::size_t k = 2; k < n; ++k) star[k] = 1;
    expect(q == star && is_star(g), "n - 1 nonzero terms but not the star polynomial and shape");
  }
}

struct TwoTermExceptions {
  std::uint64_t count = 0;
  std::string first;
};

// Graphs of order <= n_max whose polynomial has two nonzero terms although
// no component is a solid P_2 or P_3.
inline TwoTermExceptions two_term_exceptions(const PolynomialTable& table, std::size_t n_max) {
  TwoTermExceptions out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (GraphCode code = 0; code < graph_count(n); ++code) {
      if (small_nonzero_terms(table.at(n, code)) != 2) continue;
      const Graph g = graph_from_code(n, code);
      bool solid = false;
      for (VertexMask c : component_masks(g)) {
        const Graph part = induced_subgraph(g, c);
        solid = solid || is_solid_path(part, 2) || is_solid_path(part, 3);
      }
      if (solid) continue;
      if (out.count++ == 0) out.first = to_graph6(g);
    }
  }
  return out;
}

// Every labeled graph of order 1..n_max.
inline VerificationReport run_extremal_checks(const PolynomialTable& table, std::size_t n_max,
                                              std::size_t jobs = 1) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "extremal";
  r.n_max = n_max;
  if (n_max > table.n_max()) {
    throw Error(ErrorCode::kTooLarge, "table does not reach order " + std::to_string(n_max));
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    parallel_check(graph_count(n), jobs, r,
                   [&](std::uint64_t begin, std::uint64_t end, VerificationReport& part) {
                     for (GraphCode code = begin; code < end; ++code)
                       check_extremal_entry(graph_from_code(n, code), table.at(n, code), part);
                   });
  }
  const TwoTermExceptions ex = two_term_exceptions(table, n_max);
  r.notes.push_back(std::to_string(ex.count) +
                    " graphs have two nonzero terms without a solid P_2/P_3 component" +
                    (ex.count ? "; first: " + ex.first : std::string()));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

struct ConjectureTally {
  std::uint64_t polynomials = 0;
  std::uint64_t internal_zeros = 0;
  std::uint64_t not_log_concave = 0;
};

// Unimodality of q and of x q(1 + x); a failure is a counterexample to the
// conjecture. Log-concavity failures and internal zeros are only tallied.
inline void check_unimodal(const IntPolynomial& q, const std::string& graph6,
                           ConjectureTally& tally, VerificationReport& r) {
  const IntPolynomial shifted = shift_mul_x(compose_shift(q));
  const UnimodalityReport uq = unimodality_report(q);
  const UnimodalityReport us = unimodality_report(shifted);
  ++tally.polynomials;
  tally.internal_zeros += uq.internal_zero_count > 0;
  tally.not_log_concave += !is_log_concave(q);
  r.checked += 2;
  if (!uq.is_unimodal) r.fail(graph6, "counterexample: q = " + to_string(q) + " is not unimodal");
  if (!us.is_unimodal) {
    r.fail(graph6, "counterexample: x q(1 + x) = " + to_string(shifted) + " is not unimodal");
  }
}

// Every distinct polynomial of order <= n_max from the table, then `samples`
// seeded random graphs of orders n_max + 1 .. random_order_max.
inline VerificationReport run_conjecture_checks(const PolynomialTable& table, std::size_t n_max,
                                                std::size_t samples, std::uint64_t seed,
                                                std::size_t random_order_max = 13) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "conjectures";
  r.n_max = n_max;
  r.seed = seed;
  if (n_max > table.n_max()) {
    throw Error(ErrorCode::kTooLarge, "table does not reach order " + std::to_string(n_max));
  }
  ConjectureTally exhaustive;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::set<SmallPoly> seen;
    for (GraphCode code = 0; code < graph_count(n); ++code) {
      if (seen.insert(table.at(n, code)).second) {
        check_unimodal(to_polynomial(table.at(n, code)), to_graph6(graph_from_code(n, code)),
                       exhaustive, r);
      }
    }
  }
  ConjectureTally random;
  if (samples > 0) {
    const std::size_t lo = n_max + 1;
    const std::size_t hi = std::max(lo, random_order_max);
    Rng rng(seed);
    MemoCache cache(kCheckCacheEntries);
    for (std::size_t i = 0; i < samples; ++i) {
      const Graph g = random_graph(lo + uniform_below(rng, hi - lo + 1), rng);
      check_unimodal(interlace_polynomial(g, cache), to_graph6(g), random, r);
    }
  }
  const IntPolynomial claw = interlace_polynomial(star_graph(3));
  r.expect(claw == IntPolynomial{0, 2, 1, 1} && !is_log_concave(claw), star_graph(3),
           "q(K_{1,3}) should be 2x + x^2 + x^3, which is not log-concave");
  r.notes.push_back("distinct polynomials of order <= " + std::to_string(n_max) + ": " +
                    std::to_string(exhaustive.polynomials) + ", with internal zeros: " +
                    std::to_string(exhaustive.internal_zeros) + ", not log-concave: " +
                    std::to_string(exhaustive.not_log_concave));
  r.notes.push_back("random graphs: " + std::to_string(random.polynomials) +
                    ", with internal zeros: " + std::to_string(random.internal_zeros) +
                    ", not log-concave: " + std::to_string(random.not_log_concave));
  r.notes.push_back("non-log-concave witness: q(K_{1,3}) = " + to_string(claw));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace interlace::harness
