#pragma once

// Exhaustive and random generation of small graphs and double occurrence
// words.
//
// A graph of order n <= 11 is identified with a code: bit k is the k-th
// vertex pair in graph6 order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"
#include "interlace/word.hpp"

namespace interlace::harness {

using GraphCode = std::uint64_t;
using Rng = std::mt19937_64;

inline constexpr std::size_t kMaxCodedOrder = 11;

// Bound on the memo caches the checks keep per worker.
inline constexpr std::size_t kCheckCacheEntries = 1 << 18;

inline constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Position of the pair {i, j}, i < j, in graph6 order.
inline constexpr std::size_t pair_index(Vertex i, Vertex j) { return j * (j - 1) / 2 + i; }

inline void check_coded_order(std::size_t n) {
  if (n > kMaxCodedOrder) {
    throw Error(ErrorCode::kTooLarge,
                "graph codes cover orders up to " + std::to_string(kMaxCodedOrder));
  }
}

inline std::uint64_t graph_count(std::size_t n) {
  check_coded_order(n);
  return std::uint64_t{1} << pair_count(n);
}

inline Graph graph_from_code(std::size_t n, GraphCode code) {
  check_coded_order(n);
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

inline GraphCode graph_code(const Graph& g) {
  check_coded_order(g.order());
  GraphCode code = 0;
  std::size_t k = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    const VertexMask below = g.row(j) & low_mask(j);
    code |= static_cast<GraphCode>(below) << k;
    k += j;
  }
  return code;
}

// Mask of the code bits for pairs not involving v, in a graph of order n.
// Extracting those bits (in order) gives the code of G - v.
inline GraphCode pairs_avoiding(std::size_t n, Vertex v) {
  GraphCode mask = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (i != v && j != v) mask |= GraphCode{1} << pair_index(i, j);
  return mask;
}

// Calls visit(code, graph) for every labeled graph of order n.
template <typename F>
void for_each_graph(std::size_t n, F&& visit) {
  const std::uint64_t total = graph_count(n);
  for (GraphCode code = 0; code < total; ++code) visit(code, graph_from_code(n, code));
}

// Uniform in [0, bound); the plain modulus keeps streams identical across
// standard libraries (the std distributions are implementation-defined).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

// G(n, 1/2): one draw per pair in graph6 order, edge iff the top bit is set.
inline Graph random_graph(std::size_t n, Rng& rng) {
  Graph g(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng() >> 63) g.add_edge(i, j);
  return g;
}

// A uniformly random arrangement of 0, 0, 1, 1, ..., n-1, n-1 (Fisher-Yates).
inline DoubleOccurrenceWord random_word(std::size_t n, Rng& rng) {
  std::vector<Symbol> s;
  s.reserve(2 * n);
  for (Symbol i = 0; i < n; ++i) s.insert(s.end(), {i, i});
  for (std::size_t i = s.size(); i > 1; --i) std::swap(s[i - 1], s[uniform_below(rng, i)]);
  return DoubleOccurrenceWord(std::move(s));
}

// Calls visit(word) once for every cyclic double occurrence word on the
// symbols 0..n-1 (labels distinguished, reflections distinct).
template <typename F>
void for_each_word(std::size_t n, F&& visit) {
  if (n == 0) {
    visit(DoubleOccurrenceWord());
    return;
  }
  const std::size_t len = 2 * n;
  std::vector<Symbol> s(len);
  std::vector<int> left(n, 2);
  s[0] = 0;
  left[0] = 1;
  // Sequences starting with 0 cover every cyclic word; keep the ones already
  // in canonical form.
  auto fill = [&](auto&& self, std::size_t pos) -> void {
    if (pos == len) {
      DoubleOccurrenceWord w(s);
      if (w.symbols() == s) visit(w);
      return;
    }
    for (Symbol c = 0; c < n; ++c) {
      if (left[c] == 0) continue;
      --left[c];
      s[pos] = c;
      self(self, pos + 1);
      ++left[c];
    }
  };
  fill(fill, 1);
}

// Recursive trees: vertex i > 0 hangs from some parent[i] < i. Every tree of
// order n is isomorphic to at least one of the (n-1)! outcomes.
template <typename F>
void for_each_recursive_tree(std::size_t n, F&& visit) {
  if (n == 0) return;
  std::vector<Vertex> parent(n, 0);
  auto build = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      Graph g(n);
      for (Vertex i = 1; i < n; ++i) g.add_edge(i, parent[i]);
      visit(static_cast<const Graph&>(g));
      return;
    }
    for (Vertex p = 0; p < v; ++p) {
      parent[v] = p;
      self(self, v + 1);
    }
  };
  build(build, 1);
}

}  // namespace interlace::harness
