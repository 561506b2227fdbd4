#pragma once

// Eulerian digraphs (in-degree = out-degree everywhere), transition systems,
// circuit partitions, and the polynomials that count them.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"
#include "interlace/word.hpp"

namespace interlace {

using ArcId = std::size_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Arcs are identified by their index; loops and parallel arcs are allowed.
// `free_loops` counts closed components with no vertex at all (they arise
// when a vertex is split away from a loop and contribute one circuit each to
// every circuit partition).
class EulerianDigraph {
 public:
  EulerianDigraph() = default;

  EulerianDigraph(std::size_t order, std::vector<Arc> arcs, std::size_t free_loops = 0)
      : order_(order), arcs_(std::move(arcs)), free_loops_(free_loops), in_(order), out_(order) {
    for (ArcId e = 0; e < arcs_.size(); ++e) {
      const Arc& a = arcs_[e];
      if (a.tail >= order_ || a.head >= order_) {
        throw Error(ErrorCode::kInvalidDigraph,
                    "arc " + std::to_string(e) + " has an endpoint outside the vertex set");
      }
      out_[a.tail].push_back(e);
      in_[a.head].push_back(e);
    }
    for (Vertex v = 0; v < order_; ++v) {
      if (in_[v].size() != out_[v].size()) {
        throw Error(ErrorCode::kInvalidDigraph,
                    "vertex " + std::to_string(v) + " has in-degree " +
                        std::to_string(in_[v].size()) + " but out-degree " +
                        std::to_string(out_[v].size()));
      }
    }
  }

  std::size_t order() const { return order_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId e) const { return arcs_.at(e); }
  std::size_t free_loops() const { return free_loops_; }

  // Arc ids in increasing order.
  const std::vector<ArcId>& in_arcs(Vertex v) const { return in_.at(v); }
  const std::vector<ArcId>& out_arcs(Vertex v) const { return out_.at(v); }
  std::size_t degree(Vertex v) const { return out_.at(v).size(); }

  bool is_two_in_two_out() const {
    return std::all_of(out_.begin(), out_.end(), [](const auto& o) { return o.size() == 2; });
  }

  // Weak connectivity over all vertices; free loops make it disconnected
  // unless the digraph consists of a single free loop.
  bool is_connected() const {
    if (order_ == 0) return free_loops_ <= 1;
    if (free_loops_ > 0) return false;
    std::vector<std::size_t> parent(order_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t parts = order_;
    for (const Arc& a : arcs_) {
      const std::size_t ra = find(a.tail);
      const std::size_t rb = find(a.head);
      if (ra != rb) {
        parent[ra] = rb;
        --parts;
      }
    }
    return parts == 1;
  }

  // Exact equality, arc ids included.
  friend bool operator==(const EulerianDigraph& x, const EulerianDigraph& y) {
    return x.order_ == y.order_ && x.arcs_ == y.arcs_ && x.free_loops_ == y.free_loops_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Arc> arcs_;
  std::size_t free_loops_ = 0;
  std::vector<std::vector<ArcId>> in_;
  std::vector<std::vector<ArcId>> out_;
};

// Same vertex set and the same multiset of arcs, ignoring arc ids.
inline std::vector<Arc> arc_multiset(const EulerianDigraph& d) {
  std::vector<Arc> arcs = d.arcs();
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

inline bool same_digraph(const EulerianDigraph& x, const EulerianDigraph& y) {
  return x.order() == y.order() && x.free_loops() == y.free_loops() &&
         arc_multiset(x) == arc_multiset(y);
}

// D(w): one vertex per symbol and one arc from w_i to w_{i+1} (cyclically),
// so arc i leaves position i and the word itself is the Euler circuit
// 0, 1, ..., 2n - 1.
inline EulerianDigraph digraph_from_word(const DoubleOccurrenceWord& w) {
  std::vector<Arc> arcs(w.length());
  for (std::size_t i = 0; i < w.length(); ++i)
    arcs[i] = Arc{w[i], w[(i + 1) % w.length()]};
  return EulerianDigraph(w.symbol_count(), std::move(arcs));
}

// One vertex carrying m loops.
inline EulerianDigraph loops_on_one_vertex(std::size_t m) {
  return EulerianDigraph(1, std::vector<Arc>(m, Arc{0, 0}));
}

// successor[e] is the arc leaving head(e) that follows e.
struct TransitionSystem {
  std::vector<ArcId> successor;
  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
};

inline constexpr std::size_t kTransitionSystemLimit = std::size_t{1} << 20;

// prod over vertices of deg(v)!, or TooLarge once it passes `limit`.
inline std::size_t transition_system_count(const EulerianDigraph& d,
                                           std::size_t limit = kTransitionSystemLimit) {
  std::size_t total = 1;
  for (Vertex v = 0; v < d.order(); ++v) {
    for (std::size_t k = 2; k <= d.degree(v); ++k) {
      total *= k;
      if (total > limit) {
        throw Error(ErrorCode::kTooLarge,
                    "more than " + std::to_string(limit) + " transition systems");
      }
    }
  }
  return total;
}

// Visits every transition system. At each vertex the i-th in-arc is paired
// with the perm[i]-th out-arc, over all permutations perm.
template <typename F>
void for_each_transition_system(const EulerianDigraph& d, F&& visit,
                                std::size_t limit = kTransitionSystemLimit) {
  transition_system_count(d, limit);
  const std::size_t n = d.order();
  std::vector<std::vector<std::size_t>> perm(n);
  for (Vertex v = 0; v < n; ++v) {
    perm[v].resize(d.degree(v));
    std::iota(perm[v].begin(), perm[v].end(), 0);
  }
  TransitionSystem t{std::vector<ArcId>(d.arc_count())};
  auto apply = [&](Vertex v) {
    const auto& ins = d.in_arcs(v);
    const auto& outs = d.out_arcs(v);
    for (std::size_t i = 0; i < ins.size(); ++i) t.successor[ins[i]] = outs[perm[v][i]];
  };
  for (Vertex v = 0; v < n; ++v) apply(v);
  while (true) {
    visit(static_cast<const TransitionSystem&>(t));
    Vertex v = 0;
    while (v < n && !std::next_permutation(perm[v].begin(), perm[v].end())) {
      apply(v);  // wrapped back to the identity
      ++v;
    }
    if (v == n) return;
    apply(v);
  }
}

// D with vertex a resolved: the i-th in-arc at a is joined to the
// perm[i]-th out-arc and a is removed (later vertices shift down by one).
// Each trail through a becomes a single arc, placed at the position of the
// arc that enters it; loops at a that close up on themselves become free
// loops.
inline EulerianDigraph resolve_vertex(const EulerianDigraph& d, Vertex a,
                                      const std::vector<std::size_t>& perm) {
  const auto& ins = d.in_arcs(a);
  const auto& outs = d.out_arcs(a);
  std::vector<bool> seen(ins.size(), false);
  for (std::size_t p : perm) {
    if (p >= outs.size() || seen[p]) {
      throw Error(ErrorCode::kOutOfRange, "resolution is not a permutation of the arcs at a");
    }
    seen[p] = true;
  }
  if (perm.size() != ins.size()) {
    throw Error(ErrorCode::kOutOfRange, "resolution is not a permutation of the arcs at a");
  }
  std::vector<ArcId> next(d.arc_count(), d.arc_count());
  for (std::size_t i = 0; i < ins.size(); ++i) next[ins[i]] = outs[perm[i]];
  auto shifted = [a](Vertex v) { return v > a ? v - 1 : v; };
  std::vector<bool> used(d.arc_count(), false);
  std::vector<Arc> arcs;
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    const Arc& x = d.arc(e);
    if (x.tail == a) continue;
    used[e] = true;
    ArcId cur = e;
    while (d.arc(cur).head == a) {
      cur = next[cur];
      used[cur] = true;
    }
    arcs.push_back(Arc{shifted(x.tail), shifted(d.arc(cur).head)});
  }
  std::size_t free_loops = d.free_loops();
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    if (used[e]) continue;
    ++free_loops;
    for (ArcId cur = e; !used[cur]; cur = next[cur]) used[cur] = true;
  }
  return EulerianDigraph(d.order() - 1, std::move(arcs), free_loops);
}

// The closed trails of a transition system, each started at its smallest
// arc id, ordered by that id. Free loops are carried along as a count.
struct CircuitPartition {
  std::vector<std::vector<ArcId>> circuits;
  std::size_t free_loops = 0;

  std::size_t circuit_count() const { return circuits.size() + free_loops; }
  friend bool operator==(const CircuitPartition&, const CircuitPartition&) = default;
};

inline CircuitPartition circuit_partition_of(const EulerianDigraph& d, const TransitionSystem& t) {
  if (t.successor.size() != d.arc_count()) {
    throw Error(ErrorCode::kInvalidDigraph, "transition system does not match the digraph");
  }
  CircuitPartition p;
  p.free_loops = d.free_loops();
  std::vector<bool> used(d.arc_count(), false);
  for (ArcId start = 0; start < d.arc_count(); ++start) {
    if (used[start]) continue;
    std::vector<ArcId> circuit;
    for (ArcId e = start; !used[e]; e = t.successor[e]) {
      used[e] = true;
      circuit.push_back(e);
    }
    p.circuits.push_back(std::move(circuit));
  }
  return p;
}

// r(D; x) = sum over circuit partitions P of x^{|P|}.
inline IntPolynomial circuit_partition_polynomial(const EulerianDigraph& d,
                                                  std::size_t limit = kTransitionSystemLimit) {
  std::vector<BigInt> counts;
  for_each_transition_system(
      d,
      [&](const TransitionSystem& t) {
        const std::size_t k = circuit_partition_of(d, t).circuit_count();
        if (counts.size() <= k) counts.resize(k + 1);
        counts[k] += 1;
      },
      limit);
  return IntPolynomial(std::move(counts));
}

// m(D; x) with r(D; x) = x m(D; x + 1). Needs at least one arc or free loop.
inline IntPolynomial martin_polynomial(const EulerianDigraph& d,
                                       std::size_t limit = kTransitionSystemLimit) {
  if (d.arc_count() == 0 && d.free_loops() == 0) {
    throw Error(ErrorCode::kNonzeroRemainder,
                "the empty digraph has r = 1, which is not divisible by x");
  }
  const IntPolynomial r = circuit_partition_polynomial(d, limit);
  // r(x - 1) = (x - 1) m(x).
  return divide_exact_by_x_minus_1(compose_shift_inverse(r));
}

// a(D): the number of anti-circuits of a 2-in, 2-out digraph, i.e. the
// closed trails that alternate arc direction at every vertex. Each arc has a
// tail end and a head end; at each vertex the two head ends meet and the two
// tail ends meet.
inline std::size_t anti_circuit_count(const EulerianDigraph& d) {
  if (!d.is_two_in_two_out() || d.free_loops() != 0) {
    throw Error(ErrorCode::kInvalidDigraph, "anti-circuits need a 2-in, 2-out digraph");
  }
  const std::size_t ends = 2 * d.arc_count();
  std::vector<std::size_t> parent(ends);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = ends;
  auto join = [&](std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[x] = y;
      --parts;
    }
  };
  auto tail_end = [](ArcId e) { return 2 * e; };
  auto head_end = [](ArcId e) { return 2 * e + 1; };
  for (ArcId e = 0; e < d.arc_count(); ++e) join(tail_end(e), head_end(e));
  for (Vertex v = 0; v < d.order(); ++v) {
    join(head_end(d.in_arcs(v)[0]), head_end(d.in_arcs(v)[1]));
    join(tail_end(d.out_arcs(v)[0]), tail_end(d.out_arcs(v)[1]));
  }
  return parts;
}

}  // namespace interlace
