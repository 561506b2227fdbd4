#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "interlace/circuits.hpp"
#include "interlace/digraph.hpp"
#include "interlace/graph_io.hpp"
#include "interlace/interlace.hpp"
#include "interlace/word.hpp"

namespace interlace {
namespace {

using P = IntPolynomial;

DoubleOccurrenceWord word(std::string_view text) { return parse_word(text).word; }

DoubleOccurrenceWord random_word(std::size_t n, std::mt19937_64& rng) {
  std::vector<Symbol> s;
  for (Symbol i = 0; i < n; ++i) s.insert(s.end(), {i, i});
  std::shuffle(s.begin(), s.end(), rng);
  return DoubleOccurrenceWord(std::move(s));
}

// Chord-crossing oracle: a and b cross iff exactly one occurrence of b lies
// strictly between the two occurrences of a.
Graph crossing_oracle(const std::vector<Symbol>& s) {
  const std::size_t n = s.size() / 2;
  std::vector<std::vector<std::size_t>> pos(n);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]].push_back(i);
  Graph g(n);
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = a + 1; b < n; ++b) {
      int inside = 0;
      for (std::size_t p : pos[b]) inside += pos[a][0] < p && p < pos[a][1];
      if (inside == 1) g.add_edge(a, b);
    }
  return g;
}

// Euler circuits by depth-first search over arc sequences starting at arc 0.
std::size_t circuit_count_oracle(const EulerianDigraph& d) {
  const std::size_t m = d.arc_count();
  std::vector<bool> used(m, false);
  std::size_t count = 0;
  auto dfs = [&](auto&& self, ArcId cur, std::size_t depth) -> void {
    if (depth == m) {
      count += d.arc(cur).head == d.arc(0).tail;
      return;
    }
    for (ArcId next = 0; next < m; ++next) {
      if (used[next] || d.arc(next).tail != d.arc(cur).head) continue;
      used[next] = true;
      self(self, next, depth + 1);
      used[next] = false;
    }
  };
  used[0] = true;
  dfs(dfs, 0, 1);
  return count;
}

// r(D; x) for a 2-in, 2-out digraph: one bit per vertex picks which in-arc
// feeds which out-arc; count the orbits of the resulting successor map.
P partition_oracle(const EulerianDigraph& d) {
  std::vector<BigInt> r;
  const std::size_t n = d.order();
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
    std::vector<ArcId> succ(d.arc_count());
    for (Vertex v = 0; v < n; ++v) {
      std::vector<ArcId> ins, outs;
      for (ArcId e = 0; e < d.arc_count(); ++e) {
        if (d.arc(e).head == v) ins.push_back(e);
        if (d.arc(e).tail == v) outs.push_back(e);
      }
      const bool flip = choice >> v & 1;
      succ[ins[0]] = outs[flip ? 1 : 0];
      succ[ins[1]] = outs[flip ? 0 : 1];
    }
    std::vector<bool> seen(d.arc_count(), false);
    std::size_t k = 0;
    for (ArcId e = 0; e < d.arc_count(); ++e) {
      if (seen[e]) continue;
      ++k;
      for (ArcId f = e; !seen[f]; f = succ[f]) seen[f] = true;
    }
    if (r.size() <= k) r.resize(k + 1);
    r[k] += 1;
  }
  return P(std::move(r));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kOutOfRange;
}

TEST(Word, ParseAndCanonicalize) {
  const ParsedWord pw = parse_word("b a b c a c  # comment\n");
  EXPECT_EQ(pw.labels, (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(pw.word.symbols(), (std::vector<Symbol>{0, 1, 0, 2, 1, 2}));
  EXPECT_EQ(DoubleOccurrenceWord({1, 0, 0, 1}), DoubleOccurrenceWord({0, 0, 1, 1}));
  EXPECT_EQ(DoubleOccurrenceWord({2, 0, 1, 0, 1, 2}).symbols()[0], 0u);
  EXPECT_EQ(to_string(pw.word, pw.labels), "b a b c a c");
}

TEST(Word, CanonicalRotationIsRotationInvariant) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const DoubleOccurrenceWord w = random_word(1 + rng() % 7, rng);
    std::vector<Symbol> s = w.symbols();
    std::rotate(s.begin(), s.begin() + rng() % s.size(), s.end());
    EXPECT_EQ(DoubleOccurrenceWord(s), w);
  }
}

TEST(Word, Errors) {
  EXPECT_EQ(code_of([] { parse_word("1 2 1"); }), ErrorCode::kMalformedWord);
  EXPECT_EQ(code_of([] { parse_word("1 1 1 1"); }), ErrorCode::kMalformedWord);
  EXPECT_EQ(code_of([] { DoubleOccurrenceWord({0, 2, 0, 2}); }), ErrorCode::kMalformedWord);
  EXPECT_EQ(code_of([] { transpose(word("1 1 2 2"), 0, 1); }), ErrorCode::kNotInterlaced);
}

TEST(InterlaceGraph, Examples) {
  EXPECT_EQ(interlace_graph(word("1 1 2 2 3 3")), edgeless_graph(3));
  EXPECT_EQ(interlace_graph(word("1 2 1 2")), complete_graph(2));
  EXPECT_EQ(interlace_graph(word("1 2 3 1 3 4 2 4")), Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}}));
  // Symbols 1, 2, 4, 3 get ids 0, 1, 2, 3.
  EXPECT_EQ(interlace_graph(word("1 2 4 1 3 4 2 3")),
            Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(InterlaceGraph, MatchesCrossingOracle) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const DoubleOccurrenceWord w = random_word(1 + rng() % 9, rng);
    EXPECT_EQ(interlace_graph(w), crossing_oracle(w.symbols()));
  }
}

TEST(Digraph, FromWord) {
  const EulerianDigraph d = digraph_from_word(word("1 2 1 2"));
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 0}, {0, 1}, {1, 0}}));
  const EulerianDigraph loops = digraph_from_word(word("1 1"));
  EXPECT_EQ(loops.arcs(), (std::vector<Arc>{{0, 0}, {0, 0}}));
  EXPECT_TRUE(loops.is_two_in_two_out());
  auto loop_count = [](const EulerianDigraph& g) {
    return std::count_if(g.arcs().begin(), g.arcs().end(), [](const Arc& a) { return a.tail == a.head; });
  };
  // Different loop counts, so the digraphs are not isomorphic.
  EXPECT_EQ(loop_count(digraph_from_word(word("1 1 2 2 3 3"))), 3);
  EXPECT_EQ(loop_count(digraph_from_word(word("1 1 2 3 3 2"))), 2);
  EXPECT_EQ(code_of([] { EulerianDigraph(2, {{0, 1}}); }), ErrorCode::kInvalidDigraph);
}

TEST(CircuitPartitions, TwoVertexWord) {
  const EulerianDigraph d = digraph_from_word(word("1 2 1 2"));
  std::multiset<std::size_t> ks;
  for_each_transition_system(d, [&](const TransitionSystem& t) {
    ks.insert(circuit_partition_of(d, t).circuit_count());
  });
  EXPECT_EQ(ks, (std::multiset<std::size_t>{1, 1, 2, 2}));
  EXPECT_EQ(circuit_partition_polynomial(d), P({0, 2, 2}));
  const EulerianDigraph free_only(0, {}, 3);
  EXPECT_EQ(circuit_partition_polynomial(free_only), power_of_x(3));
  EXPECT_EQ(circuit_partition_polynomial(EulerianDigraph(0, {})), P({1}));
}

TEST(CircuitPartitions, LoopsOnOneVertex) {
  EXPECT_EQ(circuit_partition_polynomial(loops_on_one_vertex(3)), P({0, 2, 3, 1}));
  P rising{1};
  for (long long m = 1; m <= 8; ++m) {
    rising *= P({m - 1, 1});
    EXPECT_EQ(circuit_partition_polynomial(loops_on_one_vertex(m)), rising);
  }
}

TEST(CircuitPartitions, MatchOracleAndResolution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const DoubleOccurrenceWord w = random_word(1 + rng() % 7, rng);
    const EulerianDigraph d = digraph_from_word(w);
    const P r = circuit_partition_polynomial(d);
    EXPECT_EQ(r, partition_oracle(d));
    EXPECT_EQ(evaluate(r, 1), BigInt(1) << d.order());
    const Vertex v = rng() % d.order();
    EXPECT_EQ(circuit_partition_polynomial(resolve_vertex(d, v, {0, 1})) +
                  circuit_partition_polynomial(resolve_vertex(d, v, {1, 0})),
              r);
  }
}

TEST(Martin, Examples) {
  EXPECT_EQ(martin_polynomial(loops_on_one_vertex(3)), P({0, 1, 1}));
  EXPECT_EQ(martin_polynomial(loops_on_one_vertex(2)), P({0, 1}));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const EulerianDigraph d = digraph_from_word(random_word(1 + rng() % 6, rng));
    EXPECT_EQ(shift_mul_x(compose_shift(martin_polynomial(d))), circuit_partition_polynomial(d));
  }
  EXPECT_EQ(code_of([] { martin_polynomial(EulerianDigraph(0, {})); }), ErrorCode::kNonzeroRemainder);
}

TEST(EulerCircuits, Examples) {
  EXPECT_EQ(euler_circuits_brute(loops_on_one_vertex(2)).size(), 1u);
  EXPECT_EQ(euler_circuits_brute(digraph_from_word(word("1 2 1 2"))).size(), 2u);
  EXPECT_EQ(euler_circuit_count_best(digraph_from_word(word("1 2 1 2"))), BigInt(2));
  EXPECT_EQ(euler_circuit_count_best(loops_on_one_vertex(2)), BigInt(1));
  const EulerianDigraph split(2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
  EXPECT_EQ(code_of([&] { euler_circuit_count_best(split); }), ErrorCode::kDisconnected);
  EXPECT_EQ(code_of([&] { euler_circuits_brute(split); }), ErrorCode::kDisconnected);
}

TEST(EulerCircuits, BruteBestAndDfsAgree) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const DoubleOccurrenceWord w = random_word(1 + rng() % 8, rng);
    const EulerianDigraph d = digraph_from_word(w);
    const std::vector<EulerCircuit> all = euler_circuits_brute(d);
    EXPECT_EQ(std::set<EulerCircuit>(all.begin(), all.end()).size(), all.size());
    EXPECT_EQ(all.size(), circuit_count_oracle(d));
    EXPECT_EQ(euler_circuit_count_best(d), BigInt(all.size()));
    EXPECT_EQ(interlace_at(interlace_graph(w), 1), BigInt(all.size()));
  }
}

TEST(AntiCircuits, Examples) {
  const EulerianDigraph two = loops_on_one_vertex(2);
  EXPECT_EQ(anti_circuit_count(two), 1u);
  EXPECT_EQ(evaluate(circuit_partition_polynomial(two), -2), BigInt(2));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const EulerianDigraph d = digraph_from_word(random_word(1 + rng() % 7, rng));
    const std::size_t a = anti_circuit_count(d);
    EXPECT_GE(a, 1u);
    const BigInt sign = (d.order() + a) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(evaluate(circuit_partition_polynomial(d), -2), sign * (BigInt(1) << a));
  }
}

TEST(Transpose, SegmentSwapExample) {
  // a 1 b 1 a 2 b 2 with ids a=0, 1=1, b=2, 2=3.
  const DoubleOccurrenceWord w({0, 1, 2, 1, 0, 3, 2, 3});
  EXPECT_EQ(transpose(w, 0, 2), DoubleOccurrenceWord({0, 3, 2, 1, 0, 1, 2, 3}));
}

TEST(Transpose, InvolutionDigraphAndCommutation) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const DoubleOccurrenceWord w = random_word(2 + rng() % 7, rng);
    const Graph h = interlace_graph(w);
    for (const Edge& e : h.edges()) {
      const DoubleOccurrenceWord t = transpose(w, e.u, e.v);
      EXPECT_EQ(transpose(t, e.u, e.v), w);
      EXPECT_TRUE(same_digraph(digraph_from_word(t), digraph_from_word(w)));
      EXPECT_EQ(interlace_graph(t), label_swap(pivot(h, e.u, e.v), e.u, e.v));
    }
  }
}

// With the rotation a P b Q a R b S, swapping Q and S instead of P and R
// gives the same cyclic circuit at the level of arcs.
TEST(Transpose, OtherDelimitationGivesSameCircuit) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const DoubleOccurrenceWord w = random_word(2 + rng() % 6, rng);
    const EulerianDigraph d = digraph_from_word(w);
    const EulerCircuit c = word_circuit(w);
    for (const Edge& e : interlace_graph(w).edges()) {
      const std::vector<ArcId>& arcs = c.arcs();
      const std::size_t len = arcs.size();
      const auto [a1, a2] = w.occurrences(e.u);
      std::vector<ArcId> r(len);
      for (std::size_t k = 0; k < len; ++k) r[k] = arcs[(a1 + k) % len];
      const std::size_t ra2 = a2 - a1;
      std::vector<std::size_t> bs;
      for (std::size_t k = 0; k < len; ++k)
        if (d.arc(r[k]).tail == e.v) bs.push_back(k);
      // r = a P b Q a R b S; segments as arc ranges [start, end).
      const std::size_t b1 = bs[0], b2 = bs[1];
      std::vector<ArcId> alt;
      alt.insert(alt.end(), r.begin(), r.begin() + b1);         // a P
      alt.insert(alt.end(), r.begin() + b2, r.end());           // b S
      alt.insert(alt.end(), r.begin() + ra2, r.begin() + b2);   // a R
      alt.insert(alt.end(), r.begin() + b1, r.begin() + ra2);   // b Q
      EXPECT_EQ(EulerCircuit(alt), transpose(d, c, e.u, e.v));
      EXPECT_EQ(EulerCircuit(alt).word(d), transpose(w, e.u, e.v));
    }
  }
}

TEST(Orbits, Examples) {
  EXPECT_EQ(transposition_orbit(word("1 1 2 2 3 3")).size(), 1u);
  EXPECT_EQ(transposition_orbit(word("1 2 1 2")).size(), 2u);
  const DoubleOccurrenceWord w = word("1 2 3 1 3 4 2 4");
  EXPECT_EQ(BigInt(transposition_orbit(w).size()), euler_circuit_count_best(digraph_from_word(w)));
  EXPECT_EQ(code_of([] { transposition_orbit(word("1 1 2 2 3 3 4 4 5 5 6 6 7 7 8 8")); }),
            ErrorCode::kTooLarge);
  EXPECT_EQ(pivot_orbit(edgeless_graph(4)).size(), 1u);
}

TEST(Orbits, InterlaceGraphsOfAllCircuitsFormThePivotOrbit) {
  std::mt19937_64 rng(9);
  auto less = [](const Graph& x, const Graph& y) { return to_graph6(x) < to_graph6(y); };
  for (int i = 0; i < 60; ++i) {
    const DoubleOccurrenceWord w = random_word(1 + rng() % 6, rng);
    const EulerianDigraph d = digraph_from_word(w);
    const std::vector<EulerCircuit> orbit = transposition_orbit(w);
    EXPECT_EQ(BigInt(orbit.size()), euler_circuit_count_best(d));
    std::set<Graph, decltype(less)> from_circuits(less), from_pivots(less);
    for (const EulerCircuit& c : euler_circuits_brute(d)) from_circuits.insert(interlace_graph(c.word(d)));
    for (const Graph& g : pivot_orbit(interlace_graph(w), PivotLabels::kSwapLabels)) from_pivots.insert(g);
    EXPECT_TRUE(std::equal(from_circuits.begin(), from_circuits.end(), from_pivots.begin(),
                           from_pivots.end()));
  }
}

}  // namespace
}  // namespace interlace
