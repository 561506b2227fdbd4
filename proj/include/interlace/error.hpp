#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

enum class ErrorCode {
  kNotAnEdge,
  kOutOfRange,
  kTooLarge,
  kParse,
  kMalformedWord,
  kNotInterlaced,
  kNonzeroRemainder,
  kNegativeCoefficient,
  kDisconnected,
  kOutOfStatedRange,
  kInvalidDigraph,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kMalformedWord: return "MalformedWord";
    case ErrorCode::kNotInterlaced: return "NotInterlaced";
    case ErrorCode::kNonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::kNegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kOutOfStatedRange: return "OutOfStatedRange";
    case ErrorCode::kInvalidDigraph: return "InvalidDigraph";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace interlace
