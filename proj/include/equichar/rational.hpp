#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace equichar {

// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
//
// Values whose numerator and denominator fit in a signed 64-bit word are
// kept inline; anything larger is promoted to a shared, immutable GMP
// rational. Results are demoted back to the inline form whenever they fit,
// so equality can compare representations directly.
class Rational {
 public:
  Rational() noexcept = default;

  template <typename Int,
            std::enable_if_t<std::is_integral_v<Int> && sizeof(Int) <= 8, int> = 0>
  Rational(Int value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<Int>) {
      if (static_cast<std::int64_t>(value) != INT64_MIN) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    } else if constexpr (!std::is_signed_v<Int>) {
      if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(INT64_MAX)) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    }
    assign_big(mpq_class(mpz_class(std::to_string(value))));
  }

  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  // Accepts "p" or "p/q" with optional leading sign; throws ParseError.
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::optional<std::int64_t> to_int64() const;  // only for integers

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return !big_ && den_ == 1; }
  int sign() const;

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  mpz_class floor() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  bool small() const { return !big_; }
  void assign_big(mpq_class value);
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace equichar
