#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "equichar/cyclotomic.hpp"
#include "equichar/error.hpp"
#include "equichar/polynomial.hpp"
#include "equichar/rational.hpp"

using namespace equichar;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  return Rational(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int n) {
  std::vector<Rational> c(n);
  for (auto& v : c) v = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? Rational(0) : random_rational(rng);
  return Cyclotomic::from_powers(n, c);
}

}  // namespace

TEST(Rational, NormalizesSignAndCommonFactors) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(0, -7).str(), "0");
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "-3/2", "17", "5/12", "-1"}) EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse(" +4/6 "), Rational(2, 3));
  EXPECT_THROW(Rational::parse("4/-6"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/2/3"), ParseError);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, PromotesPastInt64AndDemotesBack) {
  const Rational big = Rational(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  EXPECT_FALSE(sq.to_int64().has_value());
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ((sq / big).to_int64(), std::numeric_limits<std::int64_t>::max());
  const Rational m = Rational(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(-(-m), m);
  EXPECT_EQ((m - Rational(1)) + Rational(1), m);
}

TEST(Rational, OrderingAndFloor) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(7, 3), Rational(2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
}

TEST(RationalProperty, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a < b, a.to_double() < b.to_double());
  }
}

TEST(Polynomial, CyclotomicPolynomialsSmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1).str(), "x - 1");
  EXPECT_EQ(cyclotomic_polynomial(6), Polynomial({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), Polynomial({1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), InvalidData);
}

TEST(Polynomial, CyclotomicDegreeIsPhiAndCoefficientsIntegral) {
  for (int n = 1; n <= 60; ++n) {
    EXPECT_EQ(cyclotomic_polynomial(n).degree(), euler_phi(n)) << n;
    EXPECT_TRUE(cyclotomic_polynomial(n).has_integer_coeffs()) << n;
  }
}

TEST(PolynomialProperty, DivmodAndGcdIdentities) {
  std::mt19937_64 rng(2);
  auto poly = [&](int deg) {
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = random_rational(rng);
    if (c.back().is_zero()) c.back() = 1;
    return Polynomial(c);
  };
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = poly(std::uniform_int_distribution<int>(0, 7)(rng));
    const Polynomial b = poly(std::uniform_int_distribution<int>(0, 4)(rng));
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    const Polynomial common = poly(2);
    const ExtendedGcd g = extended_gcd(a * common, b * common);
    EXPECT_EQ(g.s * (a * common) + g.t * (b * common), g.gcd);
    EXPECT_GE(g.gcd.degree(), 2);
    EXPECT_EQ(g.gcd.leading(), Rational(1));
  }
}

TEST(Cyclotomic, RootsOfUnityBasics) {
  for (int n = 1; n <= 24; ++n) {
    const Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    Cyclotomic power(1), sum;
    for (int k = 0; k < n; ++k) {
      sum += power;
      power *= z;
    }
    EXPECT_EQ(power, Cyclotomic(1)) << n;
    EXPECT_EQ(sum, Cyclotomic(n == 1 ? 1 : 0)) << n;
    EXPECT_EQ(z * z.conj(), Cyclotomic(1)) << n;
  }
}

TEST(Cyclotomic, MixedFieldsCompareAfterEmbedding) {
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 1), Cyclotomic::root_of_unity(8, 2));
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 3), Cyclotomic(-1));
  const Cyclotomic s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(s.order(), 12);
  EXPECT_EQ(s - Cyclotomic::root_of_unity(4, 1), Cyclotomic::root_of_unity(3, 1));
}

TEST(Cyclotomic, RationalValueAndRendering) {
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  EXPECT_EQ((z3 + z3.conj()).rational_value(), Rational(-1));
  EXPECT_THROW(z3.rational_value(), InvalidData);
  EXPECT_EQ((Cyclotomic(Rational(-1, 2)) + Cyclotomic::root_of_unity(4, 3) * Rational(3)).str(), "-1/2 - 3*E(4)");
  EXPECT_EQ(Cyclotomic::root_of_unity(10, 2).minimal().order(), 5);
  EXPECT_EQ(Cyclotomic(Rational(5, 3)).str(), "5/3");
}

TEST(Cyclotomic, DivisionByZeroThrows) {
  EXPECT_THROW(Cyclotomic(1) / Cyclotomic(0), DivisionByZero);
  const Cyclotomic z = Cyclotomic::root_of_unity(6, 1);
  EXPECT_THROW(Cyclotomic(1) / (z * z - z + Cyclotomic(1) - z * z + z - Cyclotomic(1)), DivisionByZero);
}

TEST(CyclotomicProperty, FieldAxiomsAndComplexEmbedding) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const Cyclotomic a = random_cyclotomic(rng, n), b = random_cyclotomic(rng, n),
                     c = random_cyclotomic(rng, std::uniform_int_distribution<int>(1, 12)(rng));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a.conj().conj(), a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    const auto prod = (a * b).to_complex(), expect = a.to_complex() * b.to_complex();
    EXPECT_NEAR(std::abs(prod - expect), 0.0, 1e-6 * (1 + std::abs(expect)));
  }
}

TEST(Cyclotomic, GeometricWeightSum) {
  for (int n = 2; n <= 48; ++n)
    EXPECT_EQ(geometric_weight_sum(n), Cyclotomic(n) / (Cyclotomic::root_of_unity(n, 1) - Cyclotomic(1))) << n;
  EXPECT_THROW(geometric_weight_sum(1), InvalidData);
}
