// Command-line front end: polynomials of graphs and words, Euler circuit
// counts, exhaustive enumeration and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 violations found, 2 usage or
// input error.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifdef INTERLACE_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "interlace/circuits.hpp"
#include "interlace/digraph.hpp"
#include "interlace/graph_io.hpp"
#include "interlace/harness/suites.hpp"
#include "interlace/interlace.hpp"
#include "interlace/word.hpp"

namespace {

using namespace interlace;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ordered_json polynomial_json(const IntPolynomial& p) {
  ordered_json j;
  j["polynomial"] = to_string(p);
  j["coefficients"] = coefficient_strings(p);
  return j;
}

// --- poly ------------------------------------------------------------------

struct PolyOptions {
  std::string input;
  std::string format = "edgelist";
  bool json = false;
};

int run_poly(const PolyOptions& o) {
  const std::string text = read_input(o.input);
  std::vector<Graph> graphs;
  std::vector<std::string> words;
  if (o.format == "edgelist") {
    graphs.push_back(parse_edge_list(text));
  } else if (o.format == "graph6") {
    std::istringstream in(text);
    graphs = read_graph6_stream(in);
  } else {
    const ParsedWord pw = parse_word(text);
    graphs.push_back(interlace_graph(pw.word));
    words.push_back(to_string(pw.word, pw.labels));
  }
  MemoCache cache;
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const IntPolynomial q = interlace_polynomial(graphs[i], cache);
    if (!o.json) {
      std::cout << q << '\n';
      continue;
    }
    ordered_json j;
    if (!words.empty()) j["word"] = words[i];
    j["graph6"] = to_graph6(graphs[i]);
    j.update(polynomial_json(q));
    j["value_at_1"] = evaluate(q, 1).str();
    out.push_back(std::move(j));
  }
  if (o.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  return kExitOk;
}

// --- euler -----------------------------------------------------------------

struct EulerOptions {
  std::string action;
  std::string input;
  bool json = false;
};

int run_euler(const EulerOptions& o) {
  const ParsedWord pw = parse_word(read_input(o.input));
  const EulerianDigraph d = digraph_from_word(pw.word);
  ordered_json j;
  j["word"] = to_string(pw.word, pw.labels);
  if (o.action == "count") {
    const BigInt count = euler_circuit_count_best(d);
    j["euler_circuits"] = count.str();
    if (!o.json) std::cout << count << '\n';
  } else if (o.action == "partitions") {
    const IntPolynomial r = circuit_partition_polynomial(d);
    j["circuit_partitions"] = polynomial_json(r);
    if (!o.json) std::cout << r << '\n';
  } else if (o.action == "martin") {
    const IntPolynomial m = martin_polynomial(d);
    j["martin"] = polynomial_json(m);
    if (!o.json) std::cout << m << '\n';
  } else {
    const std::vector<EulerCircuit> orbit = transposition_orbit(pw.word);
    const BigInt best = euler_circuit_count_best(d);
    j["orbit_size"] = orbit.size();
    j["euler_circuits"] = best.str();
    ordered_json words = ordered_json::array();
    for (const EulerCircuit& c : orbit) words.push_back(to_string(c.word(d), pw.labels));
    j["circuits"] = std::move(words);
    if (!o.json) {
      std::cout << "orbit size " << orbit.size() << " (Euler circuits: " << best << ")\n";
      for (const auto& w : j["circuits"]) std::cout << w.get<std::string>() << '\n';
    }
  }
  if (o.json) std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateOptions {
  std::size_t n = 0;
  bool force = false;
  bool census = false;
  bool connected = false;
  bool json = false;
  std::size_t jobs = 1;
};

int run_enumerate(const EnumerateOptions& o) {
  if (o.n > harness::kTableOrderLimit && !o.force) {
    throw UsageError("enumerating order " + std::to_string(o.n) + " graphs is expensive; pass --force");
  }
  harness::check_coded_order(o.n);
  // Keyed by coefficient vector; value: (count, first graph seen).
  std::map<std::vector<BigInt>, std::pair<std::uint64_t, std::string>> census;
  std::uint64_t graphs = 0;
  auto emit = [&](const Graph& g, const IntPolynomial& q) {
    if (o.connected && !is_connected(g)) return;
    ++graphs;
    if (o.census) {
      auto it = census.try_emplace(std::vector<BigInt>(q.coeffs().begin(), q.coeffs().end()), 0, to_graph6(g)).first;
      ++it->second.first;
    } else if (o.json) {
      ordered_json j;
      j["graph6"] = to_graph6(g);
      j.update(polynomial_json(q));
      std::cout << j.dump() << '\n';
    } else {
      std::cout << to_graph6(g) << '\t' << q << '\n';
    }
  };
  if (o.n <= harness::kTableOrderLimit) {
    const harness::PolynomialTable table(o.n, o.jobs);
    harness::for_each_graph(o.n, [&](harness::GraphCode code, const Graph& g) {
      emit(g, harness::to_polynomial(table.at(o.n, code)));
    });
  } else {
    MemoCache cache(harness::kCheckCacheEntries);
    harness::for_each_graph(
        o.n, [&](harness::GraphCode, const Graph& g) { emit(g, interlace_polynomial(g, cache)); });
  }
  if (o.census) {
    ordered_json rows = ordered_json::array();
    for (const auto& [coeffs, entry] : census) {
      const IntPolynomial q{std::vector<BigInt>(coeffs)};
      if (o.json) {
        ordered_json j;
        j["count"] = entry.first;
        j["representative"] = entry.second;
        j.update(polynomial_json(q));
        rows.push_back(std::move(j));
      } else {
        std::cout << entry.first << '\t' << entry.second << '\t' << q << '\n';
      }
    }
    if (o.json) {
      ordered_json j;
      j["n"] = o.n;
      j["graphs"] = graphs;
      j["distinct_polynomials"] = census.size();
      j["polynomials"] = std::move(rows);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "# " << graphs << " graphs, " << census.size() << " distinct polynomials\n";
    }
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  harness::SuiteOptions suite_options;
  bool json = false;
};

int run_verify(const VerifyOptions& o) {
  harness::VerificationReport r;
  if (o.suite == "identities") {
    r = harness::run_identity_suite(o.suite_options);
  } else if (o.suite == "extremal") {
    r = harness::run_extremal_suite(o.suite_options);
  } else {
    r = harness::run_conjecture_suite(o.suite_options);
  }
  if (o.json) {
    std::cout << harness::to_json(r).dump(2) << '\n';
  } else {
    std::cout << harness::summary_line(r) << '\n';
    for (const std::string& note : r.notes) std::cout << "  " << note << '\n';
    for (const harness::Violation& v : r.violations)
      std::cout << "  violation " << v.graph6 << ": " << v.detail << '\n';
  }
  return r.passed() ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interlace polynomials of graphs and 2-in, 2-out digraphs"};
  app.require_subcommand(1);

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "q(G) of a graph, or of the interlace graph of a word");
  poly_cmd->add_option("input", poly.input, "input file ('-' or omitted: stdin)");
  poly_cmd->add_option("--format", poly.format, "input format")
      ->check(CLI::IsMember({"edgelist", "graph6", "word"}));
  poly_cmd->add_flag("--json", poly.json, "JSON output");

  EulerOptions euler;
  auto* euler_cmd = app.add_subcommand("euler", "Euler circuits of the digraph of a word");
  euler_cmd->add_option("action", euler.action, "count | partitions | martin | orbit")
      ->required()
      ->check(CLI::IsMember({"count", "partitions", "martin", "orbit"}));
  euler_cmd->add_option("input", euler.input, "word file ('-' or omitted: stdin)");
  euler_cmd->add_flag("--json", euler.json, "JSON output");

  EnumerateOptions enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "q(G) for every labeled graph of order n");
  enum_cmd->add_option("n", enumerate.n, "order")->required();
  enum_cmd->add_flag("--force", enumerate.force, "allow n > 7");
  enum_cmd->add_flag("--census", enumerate.census,
                     "one line per distinct polynomial: count, representative, polynomial");
  enum_cmd->add_flag("--connected", enumerate.connected, "connected graphs only");
  enum_cmd->add_option("--jobs", enumerate.jobs, "worker threads")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--json", enumerate.json, "JSON output");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify.suite, "identities | extremal | conjectures")
      ->required()
      ->check(CLI::IsMember({"identities", "extremal", "conjectures"}));
  verify_cmd->add_option("--n-max", verify.suite_options.n_max, "largest exhaustive order")
      ->check(CLI::Range(std::size_t{1}, harness::kTableOrderLimit));
  verify_cmd->add_option("--samples", verify.suite_options.samples, "random instances");
  verify_cmd->add_option("--seed", verify.suite_options.seed, "random seed");
  verify_cmd->add_option("--jobs", verify.suite_options.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poly_cmd->parsed()) return run_poly(poly);
    if (euler_cmd->parsed()) return run_euler(euler);
    if (enum_cmd->parsed()) return run_enumerate(enumerate);
    return run_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
