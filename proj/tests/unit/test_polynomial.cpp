#include <gtest/gtest.h>

#include <random>

#include "interlace/polynomial.hpp"

namespace interlace {
namespace {

using P = IntPolynomial;

P random_poly(std::mt19937_64& rng, bool nonnegative = false) {
  std::vector<BigInt> c(rng() % 8);
  for (BigInt& v : c) {
    v = BigInt(rng() % 1000);
    if (!nonnegative && (rng() & 1)) v = -v;
  }
  return P(std::move(c));
}

// Evaluation by repeated multiplication, independent of Horner.
BigInt eval_oracle(const P& p, long long x) {
  BigInt sum = 0;
  BigInt power = 1;
  for (const BigInt& c : p.coeffs()) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

TEST(Polynomial, Normalization) {
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({1, 2, 0}).degree(), 1);
  EXPECT_EQ(P().degree(), kZeroPolynomialDegree);
  EXPECT_EQ(P({0, 0, 3, 1}).lowest_degree(), 2);
  EXPECT_EQ(P({0, 2, 0, 1}).nonzero_terms(), 2u);
}

TEST(Polynomial, ArithmeticExamples) {
  const P x = poly_x();
  EXPECT_EQ(add(x, x), P({0, 2}));
  EXPECT_EQ(mul(x, x), P({0, 0, 1}));
  EXPECT_EQ(mul(P({0, 2, 1}), x), P({0, 0, 2, 1}));
  EXPECT_EQ(scale(P({1, -1}), 3), P({3, -3}));
  EXPECT_EQ(shift_mul_x(P({1, 1}), 2), P({0, 0, 1, 1}));
  EXPECT_EQ(P({1, 1}) - P({1, 1}), P());
}

TEST(Polynomial, RingLaws) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const P a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    for (long long x : {-3, 0, 2, 5}) EXPECT_EQ(evaluate(a * b, x), eval_oracle(a, x) * eval_oracle(b, x));
  }
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(evaluate(power_of_x(10), 2), BigInt(1024));
  EXPECT_EQ(evaluate(P({0, 6, 5}), 1), BigInt(11));
  EXPECT_EQ(evaluate(P({0, 2, 1, 1}), 2), BigInt(16));
  EXPECT_EQ(evaluate(P(), 7), BigInt(0));
}

TEST(Polynomial, BigCoefficients) {
  const P big = P::monomial(BigInt(1) << 100, 3);
  EXPECT_EQ(evaluate(big * big, 1), BigInt(1) << 200);
}

TEST(Shift, ExamplesAndRoundTrip) {
  EXPECT_EQ(compose_shift(poly_x()), P({1, 1}));
  EXPECT_EQ(compose_shift(P({0, 0, 1})), P({1, 2, 1}));
  EXPECT_EQ(shift_mul_x(compose_shift(P({0, 2}))), P({0, 2, 2}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const P p = random_poly(rng);
    EXPECT_EQ(compose_shift_inverse(compose_shift(p)), p);
    EXPECT_EQ(compose_shift(compose_shift_inverse(p)), p);
    for (long long x : {-2, 0, 3}) EXPECT_EQ(evaluate(compose_shift(p), x), eval_oracle(p, x + 1));
  }
}

TEST(Division, ExamplesAndRoundTrip) {
  EXPECT_EQ(divide_exact_by_x_minus_1(P({-1, 0, 1})), P({1, 1}));
  // (x - 1) x (x + 1) / (x - 1)
  EXPECT_EQ(divide_exact_by_x_minus_1(P({0, -1, 0, 1})), P({0, 1, 1}));
  try {
    divide_exact_by_x_minus_1(poly_x());
    FAIL() << "x is not divisible by x - 1";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonzeroRemainder);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const P p = random_poly(rng);
    EXPECT_EQ(divide_exact_by_x_minus_1(p * P({-1, 1})), p);
  }
}

TEST(CoefficientTransforms, Examples) {
  const std::vector<BigInt> a1{0, 2};
  EXPECT_EQ(coefficient_transform_r_from_a(a1), (std::vector<BigInt>{0, 2, 2}));
  const std::vector<BigInt> a2{0, 0, 1};
  EXPECT_EQ(coefficient_transform_r_from_a(a2), (std::vector<BigInt>{0, 1, 2, 1}));
}

TEST(CoefficientTransforms, MutuallyInverseAndMatchShift) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const P q = random_poly(rng, true);
    const std::vector<BigInt> r = coefficient_transform_r_from_a(q.coeffs());
    EXPECT_EQ(P(r), shift_mul_x(compose_shift(q)));
    EXPECT_EQ(P(coefficient_transform_a_from_r(r)), q);
  }
}

TEST(Unimodality, Examples) {
  const UnimodalityReport star = unimodality_report(P({0, 2, 1, 1}));
  EXPECT_TRUE(star.is_unimodal);
  EXPECT_EQ(star.mode_index, 1u);
  P tail = P::monomial(1000, 3);
  for (std::size_t k = 4; k <= 12; ++k) tail += P::monomial(1, k);
  EXPECT_TRUE(unimodality_report(tail).is_unimodal);
  const UnimodalityReport gap = unimodality_report(P({0, 1, 0, 1}));
  EXPECT_FALSE(gap.is_unimodal);
  EXPECT_EQ(gap.internal_zero_count, 1u);
  EXPECT_FALSE(unimodality_report(P({0, 3, 1, 2})).is_unimodal);
  EXPECT_TRUE(unimodality_report(P({0, 0, 1, 3, 3, 1})).is_unimodal);
  EXPECT_THROW(unimodality_report(P({1, -1})), Error);
}

TEST(LogConcavity, Examples) {
  EXPECT_FALSE(is_log_concave(P({0, 2, 1, 1})));
  EXPECT_TRUE(is_log_concave(P({1, 3, 3, 1})));
  EXPECT_FALSE(is_log_concave(P({1, 0, 1})));
}

TEST(SignedPowerOfTwo, Examples) {
  EXPECT_EQ(is_signed_power_of_two(-8), (SignedPowerOfTwo{-1, 3}));
  EXPECT_EQ(is_signed_power_of_two(1), (SignedPowerOfTwo{1, 0}));
  EXPECT_FALSE(is_signed_power_of_two(6).has_value());
  EXPECT_FALSE(is_signed_power_of_two(0).has_value());
  EXPECT_EQ(is_signed_power_of_two(BigInt(1) << 90), (SignedPowerOfTwo{1, 90}));
}

TEST(Rendering, Strings) {
  EXPECT_EQ(to_string(P({0, 2, 1, 1})), "2x + x^2 + x^3");
  EXPECT_EQ(to_string(P({-1, 0, 1})), "-1 + x^2");
  EXPECT_EQ(to_string(P({0, 3, -2})), "3x - 2x^2");
  EXPECT_EQ(to_string(P()), "0");
  EXPECT_EQ(to_string(P({0, -1})), "-x");
  EXPECT_EQ(coefficient_strings(P({0, 6, 5})), (std::vector<std::string>{"0", "6", "5"}));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(10, 3), BigInt(120));
  EXPECT_EQ(binomial(3, 5), BigInt(0));
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

}  // namespace
}  // namespace interlace
