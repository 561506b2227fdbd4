#pragma once

// Text formats for graphs.
//
// Edge list: a header line "n m", then m lines "u v" with 0 <= u, v < n.
// Blank lines and '#' comments are ignored.
//
// graph6: the usual ASCII encoding. N(n) is one byte n + 63 for n <= 62,
// otherwise '~' followed by three bytes of 6 bits each; then the upper
// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six
// bits per byte, most significant first, each plus 63, zero padded.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"

namespace interlace {

namespace detail {

inline std::string strip_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  return line;
}

inline bool read_size(std::istringstream& in, std::size_t& out) {
  long long value = 0;
  if (!(in >> value) || value < 0) return false;
  out = static_cast<std::size_t>(value);
  return true;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, "edge list line " + std::to_string(line_no) + ": " + what);
  };
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  Graph g;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string content = detail::strip_comment(line);
    if (content.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(content);
    std::size_t a = 0;
    std::size_t b = 0;
    if (!detail::read_size(fields, a) || !detail::read_size(fields, b)) {
      fail("expected two non-negative integers");
    }
    std::string extra;
    if (fields >> extra) fail("unexpected trailing field '" + extra + "'");
    if (!have_header) {
      n = a;
      m = b;
      if (n > kMaxOrder) {
        throw Error(ErrorCode::kTooLarge, "edge list declares " + std::to_string(n) +
                                              " vertices; the maximum is 64");
      }
      g = Graph(n);
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) fail("vertex out of range");
    if (a == b) fail("self-loop at vertex " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      fail("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    g.add_edge(a, b);
  }
  if (!have_header) {
    ++line_no;
    fail("missing \"n m\" header");
  }
  if (seen.size() != m) {
    throw Error(ErrorCode::kParse, "edge list declares " + std::to_string(m) + " edges but has " +
                                       std::to_string(seen.size()));
  }
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

// One graph; an optional ">>graph6<<" header and surrounding whitespace are
// accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  std::size_t pos = 0;
  auto next6 = [&]() -> unsigned {
    if (pos >= text.size()) throw Error(ErrorCode::kParse, "graph6 string is truncated");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kParse, "invalid graph6 character at offset " + std::to_string(pos - 1));
    }
    return c - 63U;
  };
  std::size_t n = next6();
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') {
      throw Error(ErrorCode::kTooLarge, "graph6 order exceeds 64");
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next6();
    if (n <= 62) throw Error(ErrorCode::kParse, "non-minimal graph6 order encoding");
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge, "graph6 order " + std::to_string(n) + " exceeds 64");
  }
  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(ErrorCode::kParse, "graph6 body has " + std::to_string(text.size() - pos) +
                                       " bytes, expected " + std::to_string(bytes));
  }
  unsigned group = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        group = next6();
        left = 6;
      }
      --left;
      if ((group >> left) & 1U) g.add_edge(i, j);
    }
  }
  if (left > 0 && (group & ((1U << left) - 1)) != 0) {
    throw Error(ErrorCode::kParse, "nonzero graph6 padding bits");
  }
  return g;
}

// One graph per non-blank line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace interlace
