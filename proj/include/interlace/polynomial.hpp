#pragma once

// Exact dense univariate polynomials over arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// Degree reported for the zero polynomial.
inline constexpr std::ptrdiff_t kZeroPolynomialDegree =
    std::numeric_limits<std::ptrdiff_t>::min();

// coeffs()[i] is the coefficient of x^i. Trailing zeros are never stored, so
// the zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

  static IntPolynomial monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> coeffs(k + 1);
    coeffs[k] = std::move(c);
    return IntPolynomial(std::move(coeffs));
  }

  // 1 + x + ... + x^{hi} restricted to lo <= i <= hi; zero when lo > hi.
  static IntPolynomial geometric_block(std::size_t lo, std::ptrdiff_t hi) {
    if (hi < 0 || static_cast<std::ptrdiff_t>(lo) > hi) return {};
    std::vector<BigInt> coeffs(static_cast<std::size_t>(hi) + 1);
    for (std::size_t i = lo; i <= static_cast<std::size_t>(hi); ++i) coeffs[i] = 1;
    return IntPolynomial(std::move(coeffs));
  }

  bool is_zero() const { return coeffs_.empty(); }

  std::ptrdiff_t degree() const {
    return is_zero() ? kZeroPolynomialDegree
                     : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  // Degree of the lowest nonzero term; kZeroPolynomialDegree for zero.
  std::ptrdiff_t lowest_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<std::ptrdiff_t>(i);
    return kZeroPolynomialDegree;
  }

  std::size_t nonzero_terms() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
  }

  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  std::span<const BigInt> coeffs() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

  friend IntPolynomial operator-(IntPolynomial p) {
    for (BigInt& c : p.coeffs_) c = -c;
    return p;
  }

  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(IntPolynomial p, const BigInt& c) {
    if (c == 0) return {};
    for (BigInt& x : p.coeffs_) x *= c;
    return p;
  }

  friend IntPolynomial operator*(const BigInt& c, IntPolynomial p) { return std::move(p) * c; }

  IntPolynomial& operator*=(const IntPolynomial& other) { return *this = *this * other; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline const IntPolynomial& poly_x() {
  static const IntPolynomial x{0, 1};
  return x;
}

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
inline IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
inline IntPolynomial scale(IntPolynomial p, const BigInt& c) { return std::move(p) * c; }

// x * p.
inline IntPolynomial shift_mul_x(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> coeffs;
  coeffs.reserve(p.coeffs().size() + 1);
  coeffs.emplace_back(0);
  coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(coeffs));
}

// x^k * p.
inline IntPolynomial shift_mul_x(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<BigInt> coeffs(k);
  coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(coeffs));
}

inline IntPolynomial power_of_x(std::size_t k) { return IntPolynomial::monomial(1, k); }

inline BigInt evaluate(const IntPolynomial& p, const BigInt& x0) {
  BigInt acc = 0;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x0 + c[i];
  return acc;
}

// p(x + shift), by binomial re-expansion.
inline IntPolynomial compose_shift(const IntPolynomial& p, long long shift) {
  const auto c = p.coeffs();
  std::vector<BigInt> out(c.size());
  std::vector<BigInt> shift_pow(c.size() + 1);
  if (!shift_pow.empty()) shift_pow[0] = 1;
  for (std::size_t i = 1; i < shift_pow.size(); ++i) shift_pow[i] = shift_pow[i - 1] * shift;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j)
      out[j] += c[i] * binomial(static_cast<long long>(i), static_cast<long long>(j)) *
                shift_pow[i - j];
  }
  return IntPolynomial(std::move(out));
}

// p(1 + x).
inline IntPolynomial compose_shift(const IntPolynomial& p) { return compose_shift(p, 1); }

// p(x - 1).
inline IntPolynomial compose_shift_inverse(const IntPolynomial& p) { return compose_shift(p, -1); }

// Exact quotient p / (x - 1) by synthetic division.
inline IntPolynomial divide_exact_by_x_minus_1(const IntPolynomial& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  std::vector<BigInt> quotient(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry += c[i];
    quotient[i - 1] = carry;
  }
  if (carry + c[0] != 0) {
    throw Error(ErrorCode::kNonzeroRemainder,
                "polynomial is not divisible by (x - 1); remainder " +
                    BigInt(carry + c[0]).str());
  }
  return IntPolynomial(std::move(quotient));
}

// Interlace coefficients a_l to circuit-partition coefficients:
// r_k = sum_l a_l C(l, k - 1).
inline std::vector<BigInt> coefficient_transform_r_from_a(std::span<const BigInt> a) {
  std::vector<BigInt> r(a.size() + 1);
  for (std::size_t l = 0; l < a.size(); ++l)
    for (std::size_t k = 1; k <= l + 1; ++k)
      r[k] += a[l] * binomial(static_cast<long long>(l), static_cast<long long>(k - 1));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Inverse transform: a_k = sum_l r_{l+1} (-1)^{l-k} C(l, k). r_0 is ignored.
inline std::vector<BigInt> coefficient_transform_a_from_r(std::span<const BigInt> r) {
  std::vector<BigInt> a(r.empty() ? 0 : r.size() - 1);
  for (std::size_t l = 0; l + 1 < r.size(); ++l)
    for (std::size_t k = 0; k <= l; ++k) {
      BigInt term = r[l + 1] * binomial(static_cast<long long>(l), static_cast<long long>(k));
      if ((l - k) % 2 == 1) term = -term;
      a[k] += term;
    }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

struct UnimodalityReport {
  bool is_unimodal = true;
  // Zero coefficients strictly between the first and last nonzero ones.
  std::size_t internal_zero_count = 0;
  // Index of the first maximal coefficient; 0 for the zero polynomial.
  std::size_t mode_index = 0;
};

// Coefficients must be nonnegative. An internal zero always breaks
// unimodality and is also counted separately.
inline UnimodalityReport unimodality_report(const IntPolynomial& p) {
  const auto c = p.coeffs();
  UnimodalityReport report;
  for (const BigInt& v : c)
    if (v < 0) throw Error(ErrorCode::kNegativeCoefficient, "coefficient " + v.str());
  const std::ptrdiff_t lo = p.lowest_degree();
  if (lo == kZeroPolynomialDegree) return report;
  const std::size_t first = static_cast<std::size_t>(lo);
  const std::size_t last = c.size() - 1;
  for (std::size_t i = first; i <= last; ++i) {
    if (c[i] == 0) ++report.internal_zero_count;
    if (c[i] > c[report.mode_index] || i == first) report.mode_index = i;
  }
  bool descending = false;
  for (std::size_t i = first + 1; i <= last; ++i) {
    if (c[i] < c[i - 1]) {
      descending = true;
    } else if (c[i] > c[i - 1] && descending) {
      report.is_unimodal = false;
    }
  }
  if (report.internal_zero_count > 0) report.is_unimodal = false;
  return report;
}

// a_k^2 >= a_{k-1} a_{k+1} across the support, with no internal zeros.
inline bool is_log_concave(const IntPolynomial& p) {
  const auto c = p.coeffs();
  const std::ptrdiff_t lo = p.lowest_degree();
  if (lo == kZeroPolynomialDegree) return true;
  for (std::size_t i = static_cast<std::size_t>(lo); i < c.size(); ++i)
    if (c[i] == 0) return false;
  for (std::size_t i = static_cast<std::size_t>(lo) + 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

struct SignedPowerOfTwo {
  int sign = 1;
  std::size_t exponent = 0;
  friend bool operator==(const SignedPowerOfTwo&, const SignedPowerOfTwo&) = default;
};

// v = sign * 2^exponent, if v has that form.
inline std::optional<SignedPowerOfTwo> is_signed_power_of_two(const BigInt& v) {
  if (v == 0) return std::nullopt;
  const BigInt magnitude = abs(v);
  const std::size_t low = boost::multiprecision::lsb(magnitude);
  if (low != boost::multiprecision::msb(magnitude)) return std::nullopt;
  return SignedPowerOfTwo{v < 0 ? -1 : 1, low};
}

// Ascending degree: "2x + x^2 + x^3", "-1 + x^2", "0".
inline std::string to_string(const IntPolynomial& p) {
  const auto c = p.coeffs();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const BigInt magnitude = negative ? BigInt(-c[i]) : c[i];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += magnitude.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << to_string(p);
}

// Ascending decimal strings, as used in the JSON renderings.
inline std::vector<std::string> coefficient_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const BigInt& c : p.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace interlace
