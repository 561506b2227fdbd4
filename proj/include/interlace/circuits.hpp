#pragma once

// Euler circuits of 2-in, 2-out digraphs, the transposition C -> C^{ab}, and
// the orbits of transpositions and pivots.
//
// Circuits are kept as cyclic sequences of arc ids, not vertex words: with
// parallel arcs two different circuits can read the same word (the digraph
// of 1 2 1 2 has two Euler circuits and one word).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "interlace/determinant.hpp"
#include "interlace/digraph.hpp"
#include "interlace/error.hpp"
#include "interlace/graph.hpp"
#include "interlace/word.hpp"

namespace interlace {

// An Euler circuit as arc ids in traversal order, rotated to start at arc 0.
class EulerCircuit {
 public:
  EulerCircuit() = default;

  explicit EulerCircuit(std::vector<ArcId> arcs) : arcs_(std::move(arcs)) {
    const auto zero = std::min_element(arcs_.begin(), arcs_.end());
    std::rotate(arcs_.begin(), zero, arcs_.end());
  }

  const std::vector<ArcId>& arcs() const { return arcs_; }
  std::size_t length() const { return arcs_.size(); }

  // The vertices left in turn, as a double occurrence word.
  DoubleOccurrenceWord word(const EulerianDigraph& d) const {
    std::vector<Symbol> symbols;
    symbols.reserve(arcs_.size());
    for (ArcId e : arcs_) symbols.push_back(static_cast<Symbol>(d.arc(e).tail));
    return DoubleOccurrenceWord(std::move(symbols));
  }

  friend bool operator==(const EulerCircuit&, const EulerCircuit&) = default;
  friend auto operator<=>(const EulerCircuit&, const EulerCircuit&) = default;

 private:
  std::vector<ArcId> arcs_;
};

inline void require_circuit_digraph(const EulerianDigraph& d) {
  if (!d.is_two_in_two_out()) {
    throw Error(ErrorCode::kInvalidDigraph, "expected a 2-in, 2-out digraph");
  }
  if (d.free_loops() != 0 || !d.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "digraph has no Euler circuit: it is disconnected");
  }
}

// The circuit traced by the word's own arcs 0, 1, ..., 2n - 1 in D(w).
inline EulerCircuit word_circuit(const DoubleOccurrenceWord& w) {
  std::vector<ArcId> arcs(w.length());
  for (ArcId e = 0; e < arcs.size(); ++e) arcs[e] = e;
  return EulerCircuit(std::move(arcs));
}

inline constexpr std::size_t kBruteCircuitOrderLimit = 20;

// All Euler circuits, by running through the 2^n transition systems.
inline std::vector<EulerCircuit> euler_circuits_brute(const EulerianDigraph& d) {
  require_circuit_digraph(d);
  if (d.order() > kBruteCircuitOrderLimit) {
    throw Error(ErrorCode::kTooLarge, "brute-force circuit enumeration is limited to order " +
                                          std::to_string(kBruteCircuitOrderLimit));
  }
  std::vector<EulerCircuit> out;
  for_each_transition_system(d, [&](const TransitionSystem& t) {
    CircuitPartition p = circuit_partition_of(d, t);
    if (p.circuit_count() == 1) out.emplace_back(std::move(p.circuits.front()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Number of Euler circuits by the BEST theorem: the number of spanning
// arborescences into a fixed root times prod (deg(v) - 1)!. The arborescence
// count is a minor of the out-degree Laplacian; loops are left out of it.
inline BigInt euler_circuit_count_best(const EulerianDigraph& d) {
  if (d.free_loops() != 0 || !d.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "digraph has no Euler circuit: it is disconnected");
  }
  const std::size_t n = d.order();
  if (n == 0) return 1;
  BigInt factor = 1;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t k = 2; k < d.degree(v); ++k) factor *= k;
  if (n == 1) return factor;
  BigIntMatrix lap(n - 1, std::vector<BigInt>(n - 1));
  for (const Arc& a : d.arcs()) {
    if (a.tail == a.head || a.tail == 0) continue;
    lap[a.tail - 1][a.tail - 1] += 1;
    if (a.head != 0) lap[a.tail - 1][a.head - 1] -= 1;
  }
  return determinant(std::move(lap)) * factor;
}

// C^{ab}: with C = a P b Q a R b S as a closed trail, the trails P and R
// (each running from a to b) are exchanged, giving a R b Q a P b S.
inline EulerCircuit transpose(const EulerianDigraph& d, const EulerCircuit& c, Vertex a, Vertex b) {
  const std::size_t len = c.length();
  if (len != d.arc_count()) {
    throw Error(ErrorCode::kInvalidDigraph, "circuit does not cover the digraph");
  }
  std::vector<std::size_t> at_a;
  std::vector<std::size_t> at_b;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = d.arc(c.arcs()[i]).tail;
    if (v == a) at_a.push_back(i);
    if (v == b) at_b.push_back(i);
  }
  const auto between = [&](std::size_t i) { return at_a[0] < i && i < at_a[1]; };
  if (a == b || at_a.size() != 2 || at_b.size() != 2 || between(at_b[0]) == between(at_b[1])) {
    throw Error(ErrorCode::kNotInterlaced, "vertices " + std::to_string(a) + " and " +
                                               std::to_string(b) + " are not interlaced");
  }
  // Rotate to start at the first visit to a; then a is left at 0 and a2, b at
  // b1 < a2 < b2.
  std::vector<ArcId> r(len);
  for (std::size_t i = 0; i < len; ++i) r[i] = c.arcs()[(at_a[0] + i) % len];
  const std::size_t a2 = at_a[1] - at_a[0];
  const std::size_t p = (at_b[0] + len - at_a[0]) % len;
  const std::size_t q = (at_b[1] + len - at_a[0]) % len;
  const std::size_t b1 = std::min(p, q);
  const std::size_t b2 = std::max(p, q);
  std::vector<ArcId> out;
  out.reserve(len);
  out.insert(out.end(), r.begin() + a2, r.begin() + b2);
  out.insert(out.end(), r.begin() + b1, r.begin() + a2);
  out.insert(out.end(), r.begin(), r.begin() + b1);
  out.insert(out.end(), r.begin() + b2, r.end());
  return EulerCircuit(std::move(out));
}

inline constexpr std::size_t kOrbitSymbolLimit = 7;

// Every circuit reachable from the word's own circuit in D(w) by repeated
// transpositions, sorted.
inline std::vector<EulerCircuit> transposition_orbit(const DoubleOccurrenceWord& w) {
  if (w.symbol_count() > kOrbitSymbolLimit) {
    throw Error(ErrorCode::kTooLarge, "transposition orbits are limited to " +
                                          std::to_string(kOrbitSymbolLimit) + " symbols");
  }
  const EulerianDigraph d = digraph_from_word(w);
  std::set<EulerCircuit> seen{word_circuit(w)};
  std::deque<EulerCircuit> frontier{word_circuit(w)};
  while (!frontier.empty()) {
    const EulerCircuit c = std::move(frontier.front());
    frontier.pop_front();
    const Graph h = interlace_graph(c.word(d));
    for (const Edge& e : h.edges()) {
      EulerCircuit next = transpose(d, c, e.u, e.v);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

inline constexpr std::size_t kPivotOrbitLimit = std::size_t{1} << 16;

// Transposing a circuit pivots its interlace graph and then swaps the labels
// a and b: H(C^{ab}) = (H(C)^{ab})_{ab}. kSwapLabels follows each pivot with
// that swap, so the orbit of H(C) is exactly the labeled set of interlace
// graphs of the circuits of D(C). With kKeepLabels the two agree only up to
// relabelling.
enum class PivotLabels { kKeepLabels, kSwapLabels };

// Every graph reachable from g by repeated pivots on edges, sorted by
// adjacency rows; TooLarge once more than `limit` graphs are found.
inline std::vector<Graph> pivot_orbit(const Graph& g, PivotLabels labels = PivotLabels::kKeepLabels,
                                      std::size_t limit = kPivotOrbitLimit) {
  auto less = [](const Graph& x, const Graph& y) {
    for (Vertex v = 0; v < x.order(); ++v)
      if (x.row(v) != y.row(v)) return x.row(v) < y.row(v);
    return false;
  };
  std::set<Graph, decltype(less)> seen(less);
  seen.insert(g);
  std::deque<Graph> frontier{g};
  while (!frontier.empty()) {
    const Graph cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Edge& e : cur.edges()) {
      Graph next = detail::pivot_unchecked(cur, e.u, e.v);
      if (labels == PivotLabels::kSwapLabels) next = label_swap(next, e.u, e.v);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw Error(ErrorCode::kTooLarge,
                      "pivot orbit has more than " + std::to_string(limit) + " graphs");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace interlace
