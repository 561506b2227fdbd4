#pragma once

// Verification reports shared by all suites, with JSON output of the form
// {suite, n_max, checked, violations: [{graph6, detail}], seed, elapsed_ms}
// plus a list of informational notes.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "interlace/graph.hpp"
#include "interlace/graph_io.hpp"

namespace interlace::harness {

struct Violation {
  std::string graph6;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Only the first kRecordedViolations are kept; violation_count is exact.
inline constexpr std::size_t kRecordedViolations = 1000;

struct VerificationReport {
  std::string suite;
  std::size_t n_max = 0;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t elapsed_ms = 0;
  std::vector<std::string> notes;

  bool passed() const { return violation_count == 0; }

  void fail(std::string graph6, std::string detail) {
    ++violation_count;
    if (violations.size() < kRecordedViolations) {
      violations.push_back(Violation{std::move(graph6), std::move(detail)});
    }
  }

  void fail(const Graph& g, std::string detail) { fail(to_graph6(g), std::move(detail)); }

  // One checked instance; records a violation when ok is false.
  void expect(bool ok, const Graph& g, const std::string& detail) {
    ++checked;
    if (!ok) fail(g, detail);
  }

  // Folds another report in; used to merge per-worker and per-check results
  // in a fixed order.
  void absorb(const VerificationReport& other) {
    checked += other.checked;
    for (const Violation& v : other.violations) {
      if (violations.size() < kRecordedViolations) violations.push_back(v);
    }
    violation_count += other.violation_count;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["checked"] = r.checked;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json item;
    item["graph6"] = v.graph6;
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  nlohmann::ordered_json notes = r.notes;
  if (r.violation_count > r.violations.size()) {
    notes.push_back(std::to_string(r.violation_count - r.violations.size()) +
                    " further violations not listed");
  }
  j["notes"] = std::move(notes);
  return j;
}

// Without the timing the line is stable across runs.
inline std::string summary_line(const VerificationReport& r, bool with_time = true) {
  std::string out = r.suite + ": " + (r.passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(r.checked) + " checked, " +
                    std::to_string(r.violation_count) + " violations";
  if (with_time) out += ", " + std::to_string(r.elapsed_ms) + " ms";
  return out + ")";
}

class Stopwatch {
 public:
  std::uint64_t elapsed_ms() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace interlace::harness
