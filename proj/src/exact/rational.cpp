#include "equichar/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "equichar/error.hpp"

namespace equichar {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = INT64_MAX;

bool fits(i128 v) { return v > -kMax - 1 && v <= kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from(i128 v) {
  const bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != LONG_MIN;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  assign_big(std::move(v));
}

Rational::Rational(const mpz_class& value) { assign_big(mpq_class(value)); }

void Rational::assign_big(mpq_class value) {
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(value));
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational out;
  if (fits(num) && fits(den)) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  out.assign_big(mpq_class(mpz_from(num), mpz_from(den)));
  return out;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view t = trim(text);
  auto slash = t.find('/');
  std::string_view num_part = t.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? "1" : t.substr(slash + 1);
  if (!is_int(num_part, true) || !is_int(den_part, false))
    throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
  std::string num_str(num_part);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class num(num_str);
  mpz_class den{std::string(den_part)};
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (is_integer()) return num_;
  return std::nullopt;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return Rational(mpq_class(1) / *big_);
  Rational out;
  out.num_ = num_ < 0 ? -den_ : den_;
  out.den_ = num_ < 0 ? -num_ : num_;
  return out;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_class n = numerator();
  mpz_class d = denominator();
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) {
        Rational out;
        out.num_ = s;
        return out;
      }
    }
    // Henrici: only the shared factor of the denominators can cancel.
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const i128 da = a.den_ / g;
    const i128 db = b.den_ / g;
    const i128 num = static_cast<i128>(a.num_) * db + static_cast<i128>(b.num_) * da;
    const i128 den = da * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    const i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(num) && fits(den)) {
      Rational out;
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
      return out;
    }
    return Rational::from_wide(num, den);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.small() != b.small()) return false;  // canonical: big only when it does not fit
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace equichar
