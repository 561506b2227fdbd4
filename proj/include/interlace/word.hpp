#pragma once

// Double occurrence words: cyclic sequences in which each of n symbols
// appears exactly twice, i.e. the vertex order of an Euler circuit of a
// 2-in, 2-out digraph.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"

namespace interlace {

using Symbol = std::uint32_t;

// Stored as a canonical rotation: it starts at an occurrence of symbol 0,
// choosing the lexicographically smaller of the two such rotations. Two words
// compare equal iff they are the same cyclic word. Reflections are distinct.
class DoubleOccurrenceWord {
 public:
  DoubleOccurrenceWord() = default;

  // Symbols must be exactly 0..n-1, each twice.
  explicit DoubleOccurrenceWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    validate();
    canonicalize();
  }

  std::size_t symbol_count() const { return symbols_.size() / 2; }
  std::size_t length() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  // Positions (first, second) of symbol s in the stored rotation.
  std::pair<std::size_t, std::size_t> occurrences(Symbol s) const {
    std::pair<std::size_t, std::size_t> out{symbols_.size(), symbols_.size()};
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] != s) continue;
      if (out.first == symbols_.size()) {
        out.first = i;
      } else {
        out.second = i;
        break;
      }
    }
    if (out.second == symbols_.size()) {
      throw Error(ErrorCode::kOutOfRange, "symbol " + std::to_string(s) + " not in word");
    }
    return out;
  }

  // True iff the word visits a ... b ... a ... b.
  bool interlaced(Symbol a, Symbol b) const {
    if (a == b) return false;
    const auto [a1, a2] = occurrences(a);
    const auto [b1, b2] = occurrences(b);
    return (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2);
  }

  friend bool operator==(const DoubleOccurrenceWord&, const DoubleOccurrenceWord&) = default;
  friend auto operator<=>(const DoubleOccurrenceWord&, const DoubleOccurrenceWord&) = default;

 private:
  void validate() const {
    if (symbols_.size() % 2 != 0) {
      throw Error(ErrorCode::kMalformedWord, "word length must be even");
    }
    const std::size_t n = symbols_.size() / 2;
    std::vector<int> seen(n, 0);
    for (Symbol s : symbols_) {
      if (s >= n) {
        throw Error(ErrorCode::kMalformedWord,
                    "symbol " + std::to_string(s) + " out of range for " + std::to_string(n) +
                        " symbols");
      }
      if (++seen[s] > 2) {
        throw Error(ErrorCode::kMalformedWord,
                    "symbol " + std::to_string(s) + " appears more than twice");
      }
    }
  }

  void canonicalize() {
    if (symbols_.empty()) return;
    const std::size_t len = symbols_.size();
    std::size_t first = len;
    std::size_t second = len;
    for (std::size_t i = 0; i < len; ++i) {
      if (symbols_[i] != 0) continue;
      (first == len ? first : second) = i;
    }
    std::vector<Symbol> a(len);
    std::vector<Symbol> b(len);
    for (std::size_t i = 0; i < len; ++i) {
      a[i] = symbols_[(first + i) % len];
      b[i] = symbols_[(second + i) % len];
    }
    symbols_ = std::min(a, b);
  }

  std::vector<Symbol> symbols_;
};

// A word read from text, with the original token for each dense symbol id.
struct ParsedWord {
  DoubleOccurrenceWord word;
  std::vector<std::string> labels;
};

// Whitespace-separated tokens, each appearing exactly twice. Ids are assigned
// in order of first appearance. '#' starts a comment running to end of line.
inline ParsedWord parse_word(std::string_view text) {
  std::unordered_map<std::string, Symbol> ids;
  std::vector<std::string> labels;
  std::vector<Symbol> symbols;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      auto [it, inserted] = ids.try_emplace(token, static_cast<Symbol>(labels.size()));
      if (inserted) labels.push_back(token);
      symbols.push_back(it->second);
    }
  }
  std::vector<int> count(labels.size(), 0);
  for (Symbol s : symbols) ++count[s];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (count[i] != 2) {
      throw Error(ErrorCode::kMalformedWord, "token '" + labels[i] + "' appears " +
                                                 std::to_string(count[i]) +
                                                 " times, expected exactly 2");
    }
  }
  return ParsedWord{DoubleOccurrenceWord(std::move(symbols)), std::move(labels)};
}

// Space-separated rendering; ids are printed through `labels` when given.
inline std::string to_string(const DoubleOccurrenceWord& w,
                             const std::vector<std::string>& labels = {}) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) out += ' ';
    out += labels.empty() ? std::to_string(w[i]) : labels.at(w[i]);
  }
  return out;
}

// H(w): one vertex per symbol, ab an edge iff a and b are interlaced.
inline Graph interlace_graph(const DoubleOccurrenceWord& w) {
  const std::size_t n = w.symbol_count();
  if (n > kMaxOrder) throw Error(ErrorCode::kTooLarge, "word has more than 64 symbols");
  // Sweep once: a symbol's open set at its second occurrence holds exactly
  // the symbols whose chords it crosses.
  Graph g(n);
  VertexMask open = 0;
  std::vector<VertexMask> opened_inside(n, 0);
  std::vector<bool> started(n, false);
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Symbol s = w[i];
    if (!started[s]) {
      started[s] = true;
      open |= bit(s);
      for_each_vertex(open & ~bit(s), [&](Vertex t) { opened_inside[t] |= bit(s); });
    } else {
      open &= ~bit(s);
      // Opened after s and still open now: crosses s.
      for_each_vertex(opened_inside[s] & open, [&](Vertex t) { g.add_edge(s, t); });
      // Symbols opened before s that closed inside it were handled at their
      // own close.
    }
  }
  return g;
}

// w^{ab}: with the rotation a P b Q a R b S, the runs P and R are exchanged,
// giving a R b Q a P b S.
inline DoubleOccurrenceWord transpose(const DoubleOccurrenceWord& w, Symbol a, Symbol b) {
  if (a >= w.symbol_count() || b >= w.symbol_count() || !w.interlaced(a, b)) {
    throw Error(ErrorCode::kNotInterlaced, "symbols " + std::to_string(a) + " and " +
                                               std::to_string(b) + " are not interlaced");
  }
  const std::size_t len = w.length();
  const std::size_t start = w.occurrences(a).first;
  std::vector<Symbol> rotated(len);
  for (std::size_t i = 0; i < len; ++i) rotated[i] = w[(start + i) % len];
  std::size_t a2 = 0, b1 = len, b2 = 0;
  for (std::size_t i = 1; i < len; ++i) {
    if (rotated[i] == a) a2 = i;
    if (rotated[i] == b) (b1 == len ? b1 : b2) = i;
  }
  std::vector<Symbol> out;
  out.reserve(len);
  out.push_back(a);
  out.insert(out.end(), rotated.begin() + a2 + 1, rotated.begin() + b2);
  out.insert(out.end(), rotated.begin() + b1, rotated.begin() + a2 + 1);
  out.insert(out.end(), rotated.begin() + 1, rotated.begin() + b1);
  out.insert(out.end(), rotated.begin() + b2, rotated.end());
  return DoubleOccurrenceWord(std::move(out));
}

}  // namespace interlace
