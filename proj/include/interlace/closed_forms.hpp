#pragma once

// Closed-form interlace polynomials of the standard graph families.

#include <cstddef>
#include <string>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// q(E_n) = x^n, n >= 0.
inline IntPolynomial closed_form_edgeless(std::size_t n) { return power_of_x(n); }

// q(K_n) = 2^{n-1} x, n >= 1.
inline IntPolynomial closed_form_complete(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kOutOfStatedRange, "complete graph needs n >= 1");
  return IntPolynomial::monomial(BigInt(1) << (n - 1), 1);
}

// q(K_{1,n}) = 2x + x^2 + ... + x^n, n >= 2.
inline IntPolynomial closed_form_star(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kOutOfStatedRange, "star K_{1,n} needs n >= 2");
  return IntPolynomial::geometric_block(2, static_cast<std::ptrdiff_t>(n)) +
         IntPolynomial::monomial(2, 1);
}

// q(K_{m,n}) = (1 + ... + x^{m-1})(1 + ... + x^{n-1}) + x^m + x^n - 1.
inline IntPolynomial closed_form_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kOutOfStatedRange, "K_{m,n} needs m, n >= 1");
  }
  return IntPolynomial::geometric_block(0, static_cast<std::ptrdiff_t>(m) - 1) *
             IntPolynomial::geometric_block(0, static_cast<std::ptrdiff_t>(n) - 1) +
         power_of_x(m) + power_of_x(n) - IntPolynomial{1};
}

// Path with n edges and n + 1 vertices:
// q(P_n) = sum_r [C(n-r, r) + C(n-r-1, r)] x^{r+1}.
inline IntPolynomial closed_form_path(std::size_t n) {
  const auto len = static_cast<long long>(n);
  std::vector<BigInt> coeffs(n / 2 + 2);
  for (long long r = 0; r <= len / 2; ++r)
    coeffs[static_cast<std::size_t>(r) + 1] = binomial(len - r, r) + binomial(len - r - 1, r);
  return IntPolynomial(std::move(coeffs));
}

// Cycle C_n, n >= 3. With a, b the roots of t^2 - t - x (so a + b = 1 and
// ab = -x), the power sums s_k = a^k + b^k obey s_k = s_{k-1} + x s_{k-2};
// then q(C_n) = s_n + (x^2 - 2x - 1) for even n and s_n + (x - 1) for odd n.
inline IntPolynomial closed_form_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kOutOfStatedRange, "cycle C_n needs n >= 3");
  if (n == 3) return IntPolynomial{0, 4};
  IntPolynomial prev{2};
  IntPolynomial cur{1};
  for (std::size_t k = 2; k <= n; ++k) {
    IntPolynomial next = cur + shift_mul_x(prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n % 2 == 0 ? cur + IntPolynomial{-1, -2, 1} : cur + IntPolynomial{-1, 1};
}

// q of the complete multipartite graph K(k_1, ..., k_r):
//   (x/2) prod (2 + x + ... + x^{k_i-1}) + (-1)^r (1 - x/2) prod (x + ... + x^{k_i-1}).
// Evaluated as half of an integer polynomial whose coefficients are all even.
inline IntPolynomial q_complete_multipartite(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kOutOfStatedRange, "need at least one part");
  IntPolynomial first{0, 1};
  IntPolynomial second = parts.size() % 2 == 0 ? IntPolynomial{2, -1} : IntPolynomial{-2, 1};
  for (std::size_t k : parts) {
    if (k < 1) throw Error(ErrorCode::kOutOfStatedRange, "parts must be nonempty");
    const auto hi = static_cast<std::ptrdiff_t>(k) - 1;
    first *= IntPolynomial::geometric_block(1, hi) + IntPolynomial{2};
    second *= IntPolynomial::geometric_block(1, hi);
  }
  const IntPolynomial doubled = first + second;
  std::vector<BigInt> half;
  for (const BigInt& c : doubled.coeffs()) {
    if (c % 2 != 0) {
      throw Error(ErrorCode::kNonzeroRemainder,
                  "complete multipartite numerator has an odd coefficient");
    }
    half.push_back(c / 2);
  }
  return IntPolynomial(std::move(half));
}

}  // namespace interlace
