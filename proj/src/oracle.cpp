#include "equichar/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "equichar/error.hpp"

namespace equichar {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

int unit_inverse(int a, int n) {
  if (n == 1) return 0;
  for (int x = 1; x < n; ++x)
    if ((static_cast<std::int64_t>(a) * x) % n == 1) return x;
  throw std::logic_error("not a unit");
}

// Rank of a dense rational matrix by Gaussian elimination.
int rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Dimension of {p : deg p <= top, ord_{a_j} p >= vanish_j}.
std::int64_t constrained_polynomials(std::int64_t top, const std::vector<std::int64_t>& points,
                                     const std::vector<std::int64_t>& vanish) {
  if (top < 0) return 0;
  const std::size_t cols = static_cast<std::size_t>(top) + 1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = 0; j < points.size(); ++j) {
    // s-th Taylor coefficient at a: sum_k C(k, s) a^(k-s) p_k
    for (std::int64_t s = 0; s < vanish[j]; ++s) {
      std::vector<Rational> row(cols);
      Rational binom(1), power(1);
      for (std::int64_t k = s; k <= top; ++k) {
        row[k] = binom * power;
        binom = binom * Rational(k + 1) / Rational(k + 1 - s);
        power = power * Rational(points[j]);
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(cols) - rank(std::move(rows));
}

}  // namespace

SuperellipticCurve::SuperellipticCurve(int n, std::vector<Branch> branches)
    : n_(n), branches_(std::move(branches)) {
  if (n_ < 2) throw InvalidData("superelliptic curve needs n >= 2, got " + std::to_string(n_));
  std::sort(branches_.begin(), branches_.end(), [](const Branch& a, const Branch& b) { return a.x < b.x; });
  int g = n_;
  for (std::size_t j = 0; j < branches_.size(); ++j) {
    if (j > 0 && branches_[j].x == branches_[j - 1].x)
      throw InvalidData("branch x-value " + std::to_string(branches_[j].x) + " repeated");
    if (branches_[j].d < 1 || branches_[j].d >= n_)
      throw InvalidData("branch exponent " + std::to_string(branches_[j].d) + " at x = " +
                        std::to_string(branches_[j].x) + " must lie in [1, " + std::to_string(n_) + ")");
    g = std::gcd(g, branches_[j].d);
  }
  if (g != 1)
    throw InvalidData("disconnected curve: gcd(n, d_1, ..., d_r) = " + std::to_string(g) + ", not 1");
}

int SuperellipticCurve::exponent_sum() const {
  int s = 0;
  for (const auto& b : branches_) s += b.d;
  return s;
}

int SuperellipticCurve::infinity_exponent() const { return static_cast<int>(mod(-exponent_sum(), n_)); }

int SuperellipticCurve::ramification_index(int j) const { return n_ / std::gcd(n_, branches_[j].d); }

int SuperellipticCurve::infinity_ramification_index() const {
  const int d = infinity_exponent();
  return d == 0 ? 1 : n_ / std::gcd(n_, d);
}

std::int64_t SuperellipticCurve::genus() const {
  // 2g - 2 = -2n + sum over branch values of (n - #points above)
  std::int64_t rhs = -2 * n_;
  for (std::size_t j = 0; j < branches_.size(); ++j) rhs += n_ - std::gcd(n_, branches_[j].d);
  rhs += n_ - std::gcd(n_, infinity_exponent());
  return rhs / 2 + 1;
}

std::string SuperellipticCurve::describe() const {
  std::ostringstream os;
  os << "y^" << n_ << " =";
  for (const auto& b : branches_) {
    os << " (x";
    if (b.x > 0) os << "-" << b.x;
    if (b.x < 0) os << "+" << -b.x;
    os << ")";
    if (b.d > 1) os << "^" << b.d;
  }
  return os.str();
}

CoverData build_cover(const SuperellipticCurve& curve) {
  CoverData c;
  const int n = curve.n();
  c.group = FiniteGroup::cyclic(n);
  c.quotient_genus = 0;
  auto add = [&](std::string id, int d) {
    const int g = std::gcd(n, d);
    const int e = n / g;
    // sigma^g scales y ~ s^(d/g) by zeta_e, so the uniformizer s moves by
    // zeta_e^u with u (d/g) = 1 mod e.
    c.orbits.push_back({std::move(id), g, e, unit_inverse((d / g) % e, e)});
  };
  for (const auto& b : curve.branches()) {
    if (n / std::gcd(n, b.d) > 1) add("x=" + std::to_string(b.x), b.d);
  }
  if (curve.infinity_exponent() != 0) add("inf", curve.infinity_exponent());
  return c;
}

std::vector<std::int64_t> holomorphic_sections(const SuperellipticCurve& curve, int t,
                                               EigenConvention convention) {
  if (t < 1) throw InvalidData("pluricanonical power must be >= 1, got " + std::to_string(t));
  const std::int64_t n = curve.n();
  const std::int64_t total_d = curve.exponent_sum();
  const std::int64_t e_inf = curve.infinity_ramification_index();
  std::vector<std::int64_t> points;
  for (const auto& b : curve.branches()) points.push_back(b.x);

  std::vector<std::int64_t> dims(n, 0);
  for (std::int64_t b = 0; b < n; ++b) {
    // Over a_j: ord(x - a_j) = e, ord(y) = d/g, ord(dx) = e - 1, so
    // ord_{a_j}(f) >= ceil((b d/g - t(e - 1)) / e).
    std::vector<std::int64_t> vanish;
    std::int64_t poles = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      const std::int64_t d = curve.branches()[j].d;
      const std::int64_t g = std::gcd(n, d);
      const std::int64_t e = n / g;
      const std::int64_t lower = ceil_div(b * (d / g) - t * (e - 1), e);
      const std::int64_t pole = std::max<std::int64_t>(0, -lower);
      poles += pole;
      vanish.push_back(pole + lower);
    }
    // At infinity: ord(x) = -e, ord(y) = -e D/n, ord(dx) = -e - 1, so
    // deg f <= b D/n - t - t/e.
    const std::int64_t deg_bound = floor_div(b * total_d * e_inf - t * n * e_inf - t * n, n * e_inf);
    const std::int64_t dim = constrained_polynomials(deg_bound + poles, points, vanish);
    const std::int64_t index = convention == EigenConvention::Pullback ? mod(-b, n) : b;
    dims[index] += dim;
  }

  const std::int64_t g = curve.genus();
  std::int64_t total = 0;
  for (auto v : dims) total += v;
  if (t == 1 && total != g)
    throw std::logic_error(curve.describe() + ": found " + std::to_string(total) +
                           " holomorphic differentials, genus is " + std::to_string(g));
  if (t >= 2 && g >= 2 && total != (2 * t - 1) * (g - 1))
    throw std::logic_error(curve.describe() + ": found " + std::to_string(total) + " sections of K^" +
                           std::to_string(t) + ", expected " + std::to_string((2 * t - 1) * (g - 1)));
  return dims;
}

OracleComparison compare_with_cw(const SuperellipticCurve& curve, int t, EigenConvention convention,
                                 Mode mode) {
  if (t < 1) throw InvalidData("pluricanonical power must be >= 1, got " + std::to_string(t));
  OracleComparison out;
  out.t = t;
  out.genus = curve.genus();
  if (t >= 2 && out.genus < 2)
    throw InvalidData("K^" + std::to_string(t) + " comparison needs genus >= 2, curve has genus " +
                      std::to_string(out.genus));
  out.sections = holomorphic_sections(curve, t, convention);
  out.expected = out.sections;
  // H^1(K) is dual to the constants, on which G acts trivially.
  if (t == 1) out.expected[0] -= 1;

  const CoverData cover = build_cover(curve);
  const Problem problem(cover, canonical_bundle(cover, t));
  const CWResult cw = compute_chevalley_weil(problem, mode);
  out.cw = cw.multiplicity;
  for (std::size_t k = 0; k < out.expected.size(); ++k)
    if (out.cw[k] != Rational(out.expected[k])) out.mismatches.push_back(static_cast<int>(k));
  return out;
}

std::vector<SuperellipticCurve> enumerate_curves(int max_n, int max_branches) {
  std::vector<SuperellipticCurve> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 1; r <= max_branches; ++r) {
      std::vector<int> d(r, 1);
      while (true) {
        int g = n;
        for (int v : d) g = std::gcd(g, v);
        if (g == 1) {
          std::vector<SuperellipticCurve::Branch> br;
          for (int j = 0; j < r; ++j) br.push_back({j + 1, d[j]});
          out.emplace_back(n, std::move(br));
        }
        // next nondecreasing sequence in [1, n)
        int j = r - 1;
        while (j >= 0 && d[j] == n - 1) --j;
        if (j < 0) break;
        ++d[j];
        for (int k = j + 1; k < r; ++k) d[k] = d[j];
      }
    }
  }
  return out;
}

}  // namespace equichar
