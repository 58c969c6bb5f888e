#include "equichar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "equichar/error.hpp"

namespace equichar {

namespace detail {

namespace {

std::unique_ptr<CycloField> build_field(int n) {
  auto f = std::make_unique<CycloField>();
  const Polynomial& phi_poly = cyclotomic_polynomial(n);
  f->order = n;
  f->phi = phi_poly.degree();
  const int phi = f->phi;
  f->reductions.reserve(n);
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<int, Rational>> row;
    for (int i = 0; i < phi; ++i)
      if (!cur[i].is_zero()) row.emplace_back(i, cur[i]);
    f->reductions.push_back(std::move(row));
    // cur <- x * cur mod Phi_n (Phi_n is monic)
    Rational top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (!top.is_zero())
      for (int i = 0; i < phi; ++i) cur[i] -= top * phi_poly.coeff(i);
  }
  return f;
}

}  // namespace

const CycloField& cyclo_field(int n) {
  if (n < 1) throw InvalidData("cyclotomic order must be >= 1, got " + std::to_string(n));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[n];
  if (!slot) slot = build_field(n);
  return *slot;
}

}  // namespace detail

namespace {

int lcm_order(int a, int b) { return std::lcm(a, b); }

int mod(std::int64_t k, int n) {
  std::int64_t r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Solves the (possibly overdetermined) system cols * y = rhs exactly.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> cols,
                                                 std::vector<Rational> rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t unknowns = cols.size();
  // augmented row-major matrix
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) m[r][c] = cols[c][r];
    m[r][unknowns] = rhs[r];
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < unknowns && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rational inv = m[rank][c].inverse();
    for (std::size_t j = c; j <= unknowns; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j <= unknowns; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!m[r][unknowns].is_zero()) return std::nullopt;
  std::vector<Rational> y(unknowns);
  for (std::size_t r = 0; r < rank; ++r) y[pivot_col[r]] = m[r][unknowns];
  return y;
}

}  // namespace

Cyclotomic::Cyclotomic() : field_(&detail::cyclo_field(1)), c_(1) {}

Cyclotomic::Cyclotomic(const Rational& r) : field_(&detail::cyclo_field(1)), c_{r} {}

Cyclotomic Cyclotomic::reduce_dense(const detail::CycloField& f, const std::vector<Rational>& dense) {
  std::vector<Rational> out(f.phi);
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k].is_zero()) continue;
    for (const auto& [idx, c] : f.reductions[k % f.order]) out[idx] += dense[k] * c;
  }
  return Cyclotomic(&f, std::move(out));
}

Cyclotomic Cyclotomic::from_powers(int n, const std::vector<Rational>& power_coeffs) {
  return reduce_dense(detail::cyclo_field(n), power_coeffs);
}

Cyclotomic Cyclotomic::root_of_unity(int n, std::int64_t k) {
  const auto& f = detail::cyclo_field(n);
  std::vector<Rational> out(f.phi);
  for (const auto& [idx, c] : f.reductions[mod(k, n)]) out[idx] = c;
  return Cyclotomic(&f, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvalidData("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

std::optional<std::int64_t> Cyclotomic::integer_value() const {
  if (!is_rational()) return std::nullopt;
  return c_[0].to_int64();
}

Cyclotomic Cyclotomic::conj() const {
  const int n = order();
  std::vector<Rational> dense(n);
  for (std::size_t i = 0; i < c_.size(); ++i) dense[mod(-static_cast<std::int64_t>(i), n)] = c_[i];
  return reduce_dense(*field_, dense);
}

Cyclotomic Cyclotomic::embed(int m) const {
  const int n = order();
  if (m == n) return *this;
  if (m <= 0 || m % n != 0)
    throw InvalidData("cannot embed order " + std::to_string(n) + " into order " + std::to_string(m));
  const int step = m / n;
  std::vector<Rational> dense(m);
  for (std::size_t i = 0; i < c_.size(); ++i) dense[i * step] = c_[i];
  return reduce_dense(detail::cyclo_field(m), dense);
}

Cyclotomic Cyclotomic::minimal() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  const int n = order();
  for (int d = 2; d < n; ++d) {
    if (n % d != 0 || d % 4 == 2) continue;  // Q(zeta_d) = Q(zeta_{d/2}) when d = 2 mod 4
    const int phi_d = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(phi_d);
    for (int i = 0; i < phi_d; ++i) cols.push_back(root_of_unity(d, i).embed(n).c_);
    if (auto y = solve_exact(std::move(cols), c_)) return from_powers(d, *y);
  }
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclotomic(c_[0].inverse()).embed(order());
  const Polynomial& phi_poly = cyclotomic_polynomial(order());
  ExtendedGcd eg = extended_gcd(Polynomial(c_), phi_poly);
  // Phi_n is irreducible, so a nonzero reduced element is coprime to it.
  if (eg.gcd.degree() != 0) throw std::logic_error("cyclotomic element shares a factor with Phi_n");
  return reduce_dense(*field_, eg.s.coeffs());
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  const double step = 2.0 * std::numbers::pi / order();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) z += c_[i].to_double() * std::polar(1.0, step * static_cast<double>(i));
  return z;
}

std::string Cyclotomic::str() const {
  const Cyclotomic m = minimal();
  if (m.is_rational()) return m.c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.c_.size(); ++i) {
    const Rational& c = m.c_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << "E(" << m.order() << ')';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int m = lcm_order(a.order(), b.order());
    return a.embed(m) + b.embed(m);
  }
  std::vector<Rational> out = a.c_;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!b.c_[i].is_zero()) out[i] += b.c_[i];
  return Cyclotomic(a.field_, std::move(out));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (field_ != o.field_) return *this = *this + o;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int m = lcm_order(a.order(), b.order());
    return a.embed(m) * b.embed(m);
  }
  const int n = a.order();
  // Fold exponents mod n (zeta^n = 1) before reducing mod Phi_n.
  std::vector<Rational> dense(std::min<std::size_t>(n, 2 * a.c_.size() - 1));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) dense[(i + j) % n] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic::reduce_dense(*a.field_, dense);
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
  std::vector<Rational> out(a.c_.size());
  if (!s.is_zero())
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!a.c_[i].is_zero()) out[i] = a.c_[i] * s;
  return Cyclotomic(a.field_, std::move(out));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  const int m = lcm_order(a.order(), b.order());
  return a.embed(m).c_ == b.embed(m).c_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

Cyclotomic geometric_weight_sum(int n) {
  if (n < 2) throw InvalidData("geometric weight sum needs N >= 2, got " + std::to_string(n));
  std::vector<Rational> dense(n);
  for (int i = 0; i < n; ++i) dense[i] = i;
  Cyclotomic sum = Cyclotomic::from_powers(n, dense);
  const Cyclotomic closed = Cyclotomic(n) / (Cyclotomic::root_of_unity(n, 1) - Cyclotomic(1));
  if (!(sum == closed))
    throw std::logic_error("sum i*zeta^i != N/(zeta-1) at N=" + std::to_string(n));
  return sum;
}

}  // namespace equichar
