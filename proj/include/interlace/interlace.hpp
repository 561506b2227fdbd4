#pragma once

// The one-variable interlace polynomial q(G), computed by pivot reduction
//
//   q(G) = q(G - a) + q(G^{ab} - b)   for any edge ab,
//   q(E_n) = x^n,
//
// with isolated vertices and components peeled off first, and connected
// subproblems memoized on their exact labeled adjacency.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Order followed by the upper triangle of the adjacency matrix, row by row.
struct GraphKey {
  std::vector<std::uint64_t> words;
  friend bool operator==(const GraphKey&, const GraphKey&) = default;
};

inline GraphKey graph_key(const Graph& g) {
  const std::size_t n = g.order();
  GraphKey key;
  key.words.reserve(2 + n * (n - (n > 0 ? 1 : 0)) / 128);
  key.words.push_back(n);
  std::uint64_t current = 0;
  std::size_t used = 0;
  for (Vertex i = 0; i + 1 < n; ++i) {
    const std::size_t width = n - i - 1;
    const std::uint64_t chunk = g.row(i) >> (i + 1);
    current |= chunk << used;
    if (used + width >= 64) {
      key.words.push_back(current);
      current = used == 0 ? 0 : chunk >> (64 - used);
      used = used + width - 64;
    } else {
      used += width;
    }
  }
  if (used > 0) key.words.push_back(current);
  return key;
}

struct GraphKeyHash {
  std::size_t operator()(const GraphKey& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : key.words) {
      std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }
};

// Memo table for connected subproblems. Not synchronized: each worker owns
// its own cache. When max_entries is nonzero the table is flushed once it
// grows past that bound.
class MemoCache {
 public:
  MemoCache() = default;
  explicit MemoCache(std::size_t max_entries) : max_entries_(max_entries) {}

  const IntPolynomial* find(const GraphKey& key) {
    auto it = table_.find(key);
    if (it == table_.end()) {
      ++misses_;
      return nullptr;
    }
    ++hits_;
    return &it->second;
  }

  void insert(GraphKey key, const IntPolynomial& value) {
    if (max_entries_ != 0 && table_.size() >= max_entries_) table_.clear();
    table_.emplace(std::move(key), value);
  }

  std::size_t size() const { return table_.size(); }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  void clear() {
    table_.clear();
    hits_ = misses_ = 0;
  }

 private:
  std::unordered_map<GraphKey, IntPolynomial, GraphKeyHash> table_;
  std::size_t max_entries_ = 0;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

// The edge the recursion reduces on: a is the lowest-index vertex of minimum
// positive degree, b its lowest-index neighbor.
inline std::optional<Edge> reduction_edge(const Graph& g) {
  std::optional<Edge> best;
  int best_degree = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = std::popcount(g.row(v));
    if (d == 0) continue;
    if (!best || d < best_degree) {
      best = Edge{v, static_cast<Vertex>(std::countr_zero(g.row(v)))};
      best_degree = d;
    }
  }
  return best;
}

IntPolynomial interlace_polynomial(const Graph& g, MemoCache& cache);

namespace detail {

inline IntPolynomial interlace_connected(const Graph& g, MemoCache& cache) {
  GraphKey key = graph_key(g);
  if (const IntPolynomial* hit = cache.find(key)) return *hit;
  const Edge e = *reduction_edge(g);
  IntPolynomial result = interlace_polynomial(remove_vertex(g, e.u), cache);
  result += interlace_polynomial(remove_vertex(detail::pivot_unchecked(g, e.u, e.v), e.v), cache);
  cache.insert(std::move(key), result);
  return result;
}

}  // namespace detail

inline IntPolynomial interlace_polynomial(const Graph& g, MemoCache& cache) {
  if (g.order() == 0) return IntPolynomial{1};
  const VertexMask isolated = isolated_vertices(g);
  if (isolated != 0) {
    const auto k = static_cast<std::size_t>(std::popcount(isolated));
    if (k == g.order()) return power_of_x(k);
    return shift_mul_x(interlace_polynomial(induced_subgraph(g, ~isolated), cache), k);
  }
  const std::vector<VertexMask> comps = component_masks(g);
  if (comps.size() == 1) return detail::interlace_connected(g, cache);
  IntPolynomial product{1};
  for (VertexMask comp : comps)
    product *= detail::interlace_connected(induced_subgraph(g, comp), cache);
  return product;
}

inline IntPolynomial interlace_polynomial(const Graph& g) {
  MemoCache cache;
  return interlace_polynomial(g, cache);
}

// q(G - a) + q(G^{ab} - b) for the oriented edge ab.
inline IntPolynomial pivot_reduction(const Graph& g, Vertex a, Vertex b, MemoCache& cache) {
  const Graph pivoted = pivot(g, a, b);
  return interlace_polynomial(remove_vertex(g, a), cache) +
         interlace_polynomial(remove_vertex(pivoted, b), cache);
}

inline BigInt interlace_at(const Graph& g, const BigInt& x0) {
  return evaluate(interlace_polynomial(g), x0);
}

}  // namespace interlace
