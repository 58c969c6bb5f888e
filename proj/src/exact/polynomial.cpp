#include "equichar/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "equichar/error.hpp"

namespace equichar {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, Rational coeff) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[i];
}

bool Polynomial::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer() && c.denominator() != 1) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (!o.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational lead_inv = divisor.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    Rational q = rem[k] * lead_inv;
    for (int j = 0; j <= dd; ++j)
      if (!divisor.coeffs_[j].is_zero()) rem[k - dd + j] -= q * divisor.coeffs_[j];
    quot[k - dd] = std::move(q);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    Rational mag = c.abs();
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational norm = r0.leading().inverse();
  return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const Polynomial& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidData("cyclotomic polynomial needs n >= 1, got " + std::to_string(n));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const Polynomial>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  Polynomial numer = Polynomial::monomial(n) - Polynomial::constant(1);
  Polynomial denom = Polynomial::constant(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) denom = denom * cyclotomic_polynomial(d);
  auto [q, r] = numer.divmod(denom);
  if (!r.is_zero()) throw std::logic_error("x^n - 1 not divisible by proper cyclotomic factors");
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::make_unique<const Polynomial>(std::move(q)));
  return *it->second;
}

}  // namespace equichar
