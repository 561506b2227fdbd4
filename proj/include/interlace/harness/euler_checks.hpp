#pragma once

// Checks tying double occurrence words, their 2-in, 2-out digraphs and
// interlace graphs together: the bridge identity, Martin's evaluation at -2,
// the loop digraphs, transposition, and the orbit laws.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "interlace/circuits.hpp"
#include "interlace/digraph.hpp"
#include "interlace/graph.hpp"
#include "interlace/harness/enumeration.hpp"
#include "interlace/harness/report.hpp"
#include "interlace/interlace.hpp"
#include "interlace/polynomial.hpp"
#include "interlace/word.hpp"

namespace interlace::harness {

inline std::string symbol_list(const DoubleOccurrenceWord& w) { return "word " + to_string(w); }

// The bridge identity and everything derived from it, for one word:
//   x q(H; 1 + x) = r(D; x), q(H) = m(D), both coefficient transforms,
//   sum of r = 2^n, and Martin's r(D; -2) = (-1)^{n + a(D)} 2^{a(D)}.
inline void check_bridge(const DoubleOccurrenceWord& w, MemoCache& cache, VerificationReport& r) {
  const Graph h = interlace_graph(w);
  const EulerianDigraph d = digraph_from_word(w);
  const IntPolynomial q = interlace_polynomial(h, cache);
  const IntPolynomial rd = circuit_partition_polynomial(d);
  const std::size_t n = w.symbol_count();
  const std::string at = symbol_list(w);
  r.expect(shift_mul_x(compose_shift(q)) == rd, h,
           at + ": x q(H; 1 + x) = " + to_string(shift_mul_x(compose_shift(q))) + " but r = " +
               to_string(rd));
  r.expect(martin_polynomial(d) == q, h, at + ": m(D) != q(H)");
  r.expect(IntPolynomial(coefficient_transform_r_from_a(q.coeffs())) == rd, h,
           at + ": r from the coefficients of q disagrees");
  r.expect(IntPolynomial(coefficient_transform_a_from_r(rd.coeffs())) == q, h,
           at + ": q from the coefficients of r disagrees");
  r.expect(evaluate(rd, 1) == BigInt(1) << n, h, at + ": r(D; 1) != 2^n");
  const std::size_t a = anti_circuit_count(d);
  BigInt martin = BigInt(1) << a;
  if ((n + a) % 2 == 1) martin = -martin;
  r.expect(evaluate(rd, -2) == martin, h,
           at + ": r(D; -2) = " + BigInt(evaluate(rd, -2)).str() + " but a(D) = " +
               std::to_string(a));
  r.expect(-2 * evaluate(q, -1) == evaluate(rd, -2), h, at + ": -2 m(D; -1) != r(D; -2)");
}

// Euler circuits three ways: brute force, the BEST count, and q(H; 1).
inline void check_circuit_counts(const DoubleOccurrenceWord& w, MemoCache& cache,
                                 VerificationReport& r) {
  const Graph h = interlace_graph(w);
  const EulerianDigraph d = digraph_from_word(w);
  const BigInt brute = euler_circuits_brute(d).size();
  const BigInt best = euler_circuit_count_best(d);
  const BigInt q1 = evaluate(interlace_polynomial(h, cache), 1);
  r.expect(brute == best && best == q1, h,
           symbol_list(w) + ": brute " + brute.str() + ", BEST " + best.str() + ", q(H; 1) " +
               q1.str());
}

// r(D) = sum over the resolutions at vertex v of r(resolved D), at every v.
inline void check_resolution(const DoubleOccurrenceWord& w, VerificationReport& r) {
  const EulerianDigraph d = digraph_from_word(w);
  const IntPolynomial rd = circuit_partition_polynomial(d);
  for (Vertex v = 0; v < d.order(); ++v) {
    IntPolynomial sum;
    std::vector<std::size_t> perm{0, 1};
    do {
      sum += circuit_partition_polynomial(resolve_vertex(d, v, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.expect(sum == rd, interlace_graph(w),
             symbol_list(w) + ": resolution at " + std::to_string(v) + " gives " + to_string(sum));
  }
}

// For every interlaced pair: the transposed word has the same digraph, its
// interlace graph is (H^{ab})_{ab}, and the arc-level transposition of the
// word's own circuit renders the same word.
inline void check_transpositions(const DoubleOccurrenceWord& w, VerificationReport& r) {
  const Graph h = interlace_graph(w);
  const EulerianDigraph d = digraph_from_word(w);
  const EulerCircuit own = word_circuit(w);
  for (const Edge& e : h.edges()) {
    const DoubleOccurrenceWord t = transpose(w, static_cast<Symbol>(e.u), static_cast<Symbol>(e.v));
    const std::string at = symbol_list(w) + " at (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ")";
    r.expect(same_digraph(digraph_from_word(t), d), h, at + ": transposition changed D");
    r.expect(interlace_graph(t) == label_swap(pivot(h, e.u, e.v), e.u, e.v), h,
             at + ": H(w^{ab}) != (H^{ab})_{ab}");
    r.expect(transpose(d, own, e.u, e.v).word(d) == t, h,
             at + ": arc-level and word-level transpositions differ");
  }
}

// Every word on up to bridge_symbols symbols gets the bridge and resolution
// checks; every word on up to transposition_symbols symbols gets the
// transposition checks.
inline VerificationReport check_word_identities(std::size_t bridge_symbols,
                                                std::size_t transposition_symbols) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "word-identities";
  r.n_max = std::max(bridge_symbols, transposition_symbols);
  MemoCache cache(kCheckCacheEntries);
  for (std::size_t n = 1; n <= r.n_max; ++n) {
    for_each_word(n, [&](const DoubleOccurrenceWord& w) {
      if (n <= bridge_symbols) {
        check_bridge(w, cache, r);
        check_resolution(w, r);
      }
      if (n <= transposition_symbols) check_transpositions(w, r);
    });
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// Seeded random words of min_symbols..max_symbols symbols.
inline VerificationReport check_euler_bridge(std::size_t samples, std::uint64_t seed,
                                             std::size_t min_symbols = 3,
                                             std::size_t max_symbols = 8) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "euler-bridge";
  r.n_max = max_symbols;
  r.seed = seed;
  Rng rng(seed);
  MemoCache cache(kCheckCacheEntries);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = min_symbols + uniform_below(rng, max_symbols - min_symbols + 1);
    const DoubleOccurrenceWord w = random_word(n, rng);
    check_bridge(w, cache, r);
    check_circuit_counts(w, cache, r);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// m loops on one vertex: r = x(x + 1)...(x + m - 1).
inline VerificationReport check_loop_digraphs(std::size_t max_loops) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "loop-digraphs";
  r.n_max = max_loops;
  IntPolynomial rising{1};
  for (std::size_t m = 1; m <= max_loops; ++m) {
    rising *= IntPolynomial{static_cast<long long>(m - 1), 1};
    const IntPolynomial rd = circuit_partition_polynomial(loops_on_one_vertex(m));
    ++r.checked;
    if (rd != rising) {
      r.fail("", std::to_string(m) + " loops: r = " + to_string(rd) + ", expected " +
                     to_string(rising));
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline std::string digraph_key(const EulerianDigraph& d) {
  std::string key;
  for (const Arc& a : arc_multiset(d)) {
    key.push_back(static_cast<char>(a.tail));
    key.push_back(static_cast<char>(a.head));
  }
  return key;
}

inline std::vector<GraphCode> sorted_codes(const std::vector<Graph>& graphs) {
  std::vector<GraphCode> codes;
  codes.reserve(graphs.size());
  for (const Graph& g : graphs) codes.push_back(graph_code(g));
  std::sort(codes.begin(), codes.end());
  return codes;
}

// Each member's set must equal every other set that contains it: members
// shared between sets force the sets to coincide.
template <typename Member>
void check_sets_partition(const std::vector<std::vector<Member>>& sets, std::size_t n,
                          const char* what, VerificationReport& r) {
  std::map<Member, std::size_t> first_owner;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (const Member& m : sets[s]) {
      const auto [it, fresh] = first_owner.emplace(m, s);
      ++r.checked;
      if (!fresh && sets[it->second] != sets[s]) {
        r.fail("", std::string(what) + " at " + std::to_string(n) +
                       " symbols: overlapping sets differ (sets " + std::to_string(it->second) +
                       " and " + std::to_string(s) + ")");
      }
    }
  }
}

// For every word on up to max_symbols symbols, grouped by digraph D:
//   - the transposition orbit of any circuit of D reaches every word of D,
//     and its size is the BEST count;
//   - H(circuits of D) is the label-swapping pivot orbit of H(C);
//   - sets H(D) that meet are equal, and sets D(H) that meet are equal.
inline VerificationReport check_orbit_laws(std::size_t max_symbols) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "orbit-laws";
  r.n_max = max_symbols;
  for (std::size_t n = 1; n <= max_symbols; ++n) {
    std::unordered_map<std::string, std::size_t> digraph_id;
    std::unordered_map<std::string, std::size_t> word_digraph;
    std::vector<std::vector<GraphCode>> graphs_of_digraph;
    std::map<GraphCode, std::vector<std::size_t>> digraphs_of_graph;
    for_each_word(n, [&](const DoubleOccurrenceWord& w) {
      const EulerianDigraph d = digraph_from_word(w);
      const Graph h = interlace_graph(w);
      const std::string key = digraph_key(d);
      const std::string word_key(w.symbols().begin(), w.symbols().end());
      auto [it, fresh] = digraph_id.emplace(key, graphs_of_digraph.size());
      if (fresh) {
        const std::vector<EulerCircuit> orbit = transposition_orbit(w);
        r.expect(BigInt(orbit.size()) == euler_circuit_count_best(d), h,
                 symbol_list(w) + ": orbit size " + std::to_string(orbit.size()) +
                     " != BEST count " + euler_circuit_count_best(d).str());
        std::vector<Graph> hs;
        for (const EulerCircuit& c : orbit) {
          const DoubleOccurrenceWord cw = c.word(d);
          word_digraph.emplace(std::string(cw.symbols().begin(), cw.symbols().end()), it->second);
          hs.push_back(interlace_graph(cw));
        }
        std::vector<GraphCode> codes = sorted_codes(hs);
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        r.expect(codes == sorted_codes(pivot_orbit(h, PivotLabels::kSwapLabels)), h,
                 symbol_list(w) + ": H(circuits of D) != pivot orbit of H");
        graphs_of_digraph.push_back(std::move(codes));
      }
      const auto owner = word_digraph.find(word_key);
      r.expect(owner != word_digraph.end() && owner->second == it->second, h,
               symbol_list(w) + ": word is not in the transposition orbit of its digraph");
      std::vector<std::size_t>& ds = digraphs_of_graph[graph_code(h)];
      if (ds.empty() || ds.back() != it->second) ds.push_back(it->second);
    });
    std::vector<std::vector<std::size_t>> digraph_sets;
    for (auto& [code, ds] : digraphs_of_graph) {
      std::sort(ds.begin(), ds.end());
      ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
      digraph_sets.push_back(ds);
    }
    check_sets_partition(graphs_of_digraph, n, "H(D)", r);
    check_sets_partition(digraph_sets, n, "D(H)", r);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace interlace::harness
