#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "equichar/polynomial.hpp"
#include "equichar/rational.hpp"

namespace equichar {

namespace detail {

// Per-order reduction data for Q(zeta_n) = Q[x]/(Phi_n). Built once per n
// and never freed, so elements can hold a raw pointer to it.
struct CycloField {
  int order = 1;
  int phi = 1;
  // reductions[k] = x^k mod Phi_n for 0 <= k < n, as sparse (index, coeff).
  std::vector<std::vector<std::pair<int, Rational>>> reductions;
};

const CycloField& cyclo_field(int n);

}  // namespace detail

// An element of the cyclotomic field Q(zeta_n), zeta_n = exp(2 pi i / n),
// stored in the power basis {1, zeta_n, ..., zeta_n^(phi(n)-1)} modulo Phi_n.
//
// Binary operations on elements of different orders first embed both
// operands into Q(zeta_lcm). Results stay at that order; minimal() finds the
// smallest field containing the value when a canonical rendering is needed.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  template <typename Int,
            std::enable_if_t<std::is_integral_v<Int> && sizeof(Int) <= 8, int> = 0>
  Cyclotomic(Int v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  // Sum of power_coeffs[i] * zeta_n^i; any length is accepted and reduced.
  static Cyclotomic from_powers(int n, const std::vector<Rational>& power_coeffs);
  static Cyclotomic root_of_unity(int n, std::int64_t k);

  int order() const { return field_->order; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws InvalidData when the value is not rational.
  Rational rational_value() const;
  std::optional<std::int64_t> integer_value() const;

  Cyclotomic conj() const;
  Cyclotomic embed(int multiple_order) const;
  Cyclotomic minimal() const;
  Cyclotomic inverse() const;

  std::complex<double> to_complex() const;
  // Rendering of the minimal-order form, e.g. "-1/2 + 3*E(4)^3".
  std::string str() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s);
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const detail::CycloField* field, std::vector<Rational> coeffs)
      : field_(field), c_(std::move(coeffs)) {}

  static Cyclotomic reduce_dense(const detail::CycloField& f, const std::vector<Rational>& dense);

  const detail::CycloField* field_;
  std::vector<Rational> c_;  // length field_->phi
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

// sum_{i=0}^{N-1} i * zeta_N^i. Verifies that the result equals
// N / (zeta_N - 1) exactly and throws std::logic_error otherwise.
// Throws InvalidData for N < 2.
Cyclotomic geometric_weight_sum(int n);

}  // namespace equichar
