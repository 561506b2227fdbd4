#pragma once

// q(G) for every labeled graph of order <= 7, indexed by order and graph
// code. Orders up to 6 come straight from the recursion; order 7 entries are
// one pivot reduction away from the order-6 table.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"
#include "interlace/harness/enumeration.hpp"
#include "interlace/harness/parallel.hpp"
#include "interlace/interlace.hpp"
#include "interlace/polynomial.hpp"

namespace interlace::harness {

inline constexpr std::size_t kTableOrderLimit = 7;

// Coefficients of x^0..x^7. Every coefficient at order <= 7 is at most 2^6.
using SmallPoly = std::array<std::uint16_t, kTableOrderLimit + 1>;

inline SmallPoly operator+(const SmallPoly& p, const SmallPoly& q) {
  SmallPoly out{};
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<std::uint16_t>(p[k] + q[k]);
  return out;
}

inline IntPolynomial to_polynomial(const SmallPoly& p) {
  std::vector<BigInt> c(p.begin(), p.end());
  return IntPolynomial(std::move(c));
}

inline SmallPoly to_small(const IntPolynomial& p) {
  if (p.degree() > static_cast<std::ptrdiff_t>(kTableOrderLimit)) {
    throw Error(ErrorCode::kTooLarge, "polynomial does not fit the order-7 table");
  }
  SmallPoly out{};
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] < 0 || p.coeffs()[k] > 0xffff) {
      throw Error(ErrorCode::kOutOfRange, "coefficient does not fit the order-7 table");
    }
    out[k] = p.coeffs()[k].convert_to<std::uint16_t>();
  }
  return out;
}

inline std::int64_t evaluate_small(const SmallPoly& p, std::int64_t x) {
  std::int64_t acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// -1 for the zero polynomial.
inline int small_degree(const SmallPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (p[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

inline int small_lowest_degree(const SmallPoly& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) return static_cast<int>(k);
  return -1;
}

inline std::size_t small_nonzero_terms(const SmallPoly& p) {
  std::size_t count = 0;
  for (std::uint16_t c : p) count += c != 0;
  return count;
}

class PolynomialTable {
 public:
  PolynomialTable() = default;

  // jobs only affects the order-7 pass.
  explicit PolynomialTable(std::size_t n_max, std::size_t jobs = 1) : tables_(n_max + 1) {
    if (n_max > kTableOrderLimit) {
      throw Error(ErrorCode::kTooLarge,
                  "the polynomial table covers orders up to " + std::to_string(kTableOrderLimit));
    }
    for (std::size_t n = 0; n <= n_max && n < kTableOrderLimit; ++n) {
      MemoCache cache;
      tables_[n].resize(graph_count(n));
      for_each_graph(n, [&](GraphCode code, const Graph& g) {
        tables_[n][code] = to_small(interlace_polynomial(g, cache));
      });
    }
    if (n_max == kTableOrderLimit) build_by_reduction(kTableOrderLimit, jobs);
  }

  std::size_t n_max() const { return tables_.empty() ? 0 : tables_.size() - 1; }

  const SmallPoly& at(std::size_t n, GraphCode code) const { return tables_.at(n).at(code); }
  const SmallPoly& at(const Graph& g) const { return at(g.order(), graph_code(g)); }

 private:
  void build_by_reduction(std::size_t n, std::size_t jobs) {
    tables_[n].resize(graph_count(n));
    std::vector<GraphCode> keep(n);
    for (Vertex v = 0; v < n; ++v) keep[v] = pairs_avoiding(n, v);
    parallel_ranges(graph_count(n), jobs, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
      for (GraphCode code = begin; code < end; ++code) {
        const Graph g = graph_from_code(n, code);
        const auto e = reduction_edge(g);
        if (!e) {
          SmallPoly p{};
          p[n] = 1;
          tables_[n][code] = p;
          continue;
        }
        const GraphCode pivoted = graph_code(detail::pivot_unchecked(g, e->u, e->v));
        tables_[n][code] = at(n - 1, detail::compress_bits(code, keep[e->u])) +
                           at(n - 1, detail::compress_bits(pivoted, keep[e->v]));
      }
    });
  }

  std::vector<std::vector<SmallPoly>> tables_;
};

}  // namespace interlace::harness
