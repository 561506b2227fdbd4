#pragma once

// The three verification suites behind `verify`. Each is deterministic given
// its parameters; the per-check reports are folded into one in a fixed order
// and their untimed summary lines kept as notes, so only elapsed_ms varies
// between runs.

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "interlace/harness/euler_checks.hpp"
#include "interlace/harness/graph_checks.hpp"
#include "interlace/harness/report.hpp"
#include "interlace/harness/table.hpp"
#include "interlace/harness/theorem_checks.hpp"

namespace interlace::harness {

struct SuiteOptions {
  std::size_t n_max = 6;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

// Scales of the word and tree checks; the words stop at six symbols.
inline constexpr std::size_t kBridgeWordSymbols = 5;
inline constexpr std::size_t kWordSymbols = 6;
inline constexpr std::size_t kPivotLemmaOrder = 6;
inline constexpr std::size_t kTreeOrder = 9;
inline constexpr std::size_t kFibonacciEdges = 15;
inline constexpr std::size_t kLoopDigraphs = 8;
// Random graphs for the conjecture suite go up to this order.
inline constexpr std::size_t kRandomOrderMax = 13;

namespace suite_detail {

inline void fold(VerificationReport& into, const VerificationReport& part) {
  into.absorb(part);
  into.notes.push_back(summary_line(part, false));
}

// Uses `table` when it reaches n_max, else builds one.
template <typename F>
auto with_table(const PolynomialTable* table, const SuiteOptions& o, F&& body) {
  if (o.n_max > kTableOrderLimit) {
    throw Error(ErrorCode::kTooLarge, "exhaustive checks cover orders up to " +
                                          std::to_string(kTableOrderLimit));
  }
  if (table != nullptr && table->n_max() >= o.n_max) return body(*table);
  const PolynomialTable own(o.n_max, o.jobs);
  return body(own);
}

}  // namespace suite_detail

inline VerificationReport run_identity_suite(const SuiteOptions& o,
                                             const PolynomialTable* table = nullptr) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "identities";
  r.n_max = o.n_max;
  r.seed = o.seed;
  suite_detail::with_table(table, o, [&](const PolynomialTable& t) {
    suite_detail::fold(r, check_graph_identities(t, o.n_max, o.jobs));
    return 0;
  });
  suite_detail::fold(r, check_pivot_lemma(std::min(o.n_max, kPivotLemmaOrder), o.jobs));
  suite_detail::fold(r, check_forests(kTreeOrder));
  suite_detail::fold(r, check_rotations(o.samples, o.seed));
  suite_detail::fold(r, check_substitution(o.samples, o.seed + 1));
  suite_detail::fold(r, check_closed_forms());
  suite_detail::fold(r, check_fibonacci(kFibonacciEdges));
  suite_detail::fold(r, check_reference_vectors());
  suite_detail::fold(r, check_word_identities(std::min(o.n_max, kBridgeWordSymbols),
                                              std::min(o.n_max, kWordSymbols)));
  suite_detail::fold(r, check_euler_bridge(o.samples, o.seed + 2));
  suite_detail::fold(r, check_loop_digraphs(kLoopDigraphs));
  suite_detail::fold(r, check_orbit_laws(std::min(o.n_max, kWordSymbols)));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline VerificationReport run_extremal_suite(const SuiteOptions& o,
                                             const PolynomialTable* table = nullptr) {
  Stopwatch clock;
  VerificationReport r = suite_detail::with_table(
      table, o, [&](const PolynomialTable& t) { return run_extremal_checks(t, o.n_max, o.jobs); });
  r.seed = o.seed;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline VerificationReport run_conjecture_suite(const SuiteOptions& o,
                                               const PolynomialTable* table = nullptr) {
  Stopwatch clock;
  VerificationReport r = suite_detail::with_table(table, o, [&](const PolynomialTable& t) {
    return run_conjecture_checks(t, o.n_max, o.samples, o.seed, kRandomOrderMax);
  });
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace interlace::harness
