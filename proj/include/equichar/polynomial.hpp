#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equichar/rational.hpp"

namespace equichar {

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(int degree, Rational coeff = 1);
  static Polynomial constant(Rational c) { return monomial(0, std::move(c)); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool has_integer_coeffs() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;
  Polynomial t;  // s*a + t*b == gcd
};

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
// the product of Phi_d over the proper divisors d of n. Throws InvalidData
// for n < 1.
const Polynomial& cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace equichar
