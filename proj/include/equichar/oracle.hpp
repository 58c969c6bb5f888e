#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equichar/cover.hpp"
#include "equichar/cw.hpp"

namespace equichar {

// y^n = prod_j (x - a_j)^(d_j), a cyclic n-fold cover of P^1 with
// sigma: y -> zeta_n y. Branch points are kept sorted by x-value.
class SuperellipticCurve {
 public:
  struct Branch {
    std::int64_t x;
    int d;
  };

  // Throws InvalidData for n < 2, repeated x-values, d outside [1, n), or
  // gcd(n, d_1, ..., d_r) != 1 (message contains "disconnected").
  SuperellipticCurve(int n, std::vector<Branch> branches);

  int n() const { return n_; }
  const std::vector<Branch>& branches() const { return branches_; }
  int exponent_sum() const;    // D = sum d_j
  int infinity_exponent() const;  // (-D) mod n; 0 when infinity is unramified
  int ramification_index(int j) const;  // n / gcd(n, d_j)
  int infinity_ramification_index() const;
  // Riemann-Hurwitz over P^1, counted from the branch exponents directly.
  std::int64_t genus() const;
  std::string describe() const;  // "y^3 = (x-1)(x-2)^2"

 private:
  int n_;
  std::vector<Branch> branches_;
};

// Orbit ids: "x=<value>" for finite branch points and "inf".
CoverData build_cover(const SuperellipticCurve& curve);

// Which power of zeta_n a sigma-eigenform f(x) y^-b (dx)^t is filed under.
//   Pullback:     sigma^* multiplies it by zeta_n^-b, character index -b mod n.
//   Pushforward:  the opposite sign, kept only as a negative control.
enum class EigenConvention { Pullback, Pushforward };

// dim H^0(K^t)_xi for every irreducible xi^k of cyclic(n), indexed by k.
// Each eigenspace is the space of f(x) y^-b (dx)^t, 0 <= b < n, f a rational
// function in x; its holomorphy conditions are bounds on the order of f at
// every a_j and on deg f at infinity, and the dimension is the rank defect
// of the resulting Taylor-coefficient conditions, computed exactly.
// Throws std::logic_error when the total disagrees with g (t = 1) or
// (2t-1)(g-1) (t >= 2, g >= 2).
std::vector<std::int64_t> holomorphic_sections(const SuperellipticCurve& curve, int t,
                                               EigenConvention convention = EigenConvention::Pullback);

struct OracleComparison {
  int t = 1;
  std::int64_t genus = 0;
  std::vector<std::int64_t> sections;  // dim H^0(K^t)_xi
  std::vector<std::int64_t> expected;  // sections minus [t = 1, xi trivial]
  std::vector<Rational> cw;            // CW multiplicities
  std::vector<int> mismatches;         // indices where expected != cw
  bool match() const { return mismatches.empty(); }
};

// Compares CW on K^t with the section count. Throws InvalidData for t < 1
// and for t >= 2 on curves of genus < 2, where H^1(K^t) need not vanish.
OracleComparison compare_with_cw(const SuperellipticCurve& curve, int t,
                                 EigenConvention convention = EigenConvention::Pullback,
                                 Mode mode = Mode::Proof);

// Every connected curve with 2 <= n <= max_n and 1 <= r <= max_branches
// branch points at x = 1..r, one per multiset of exponents (the order of the
// d_j only moves the branch points around).
std::vector<SuperellipticCurve> enumerate_curves(int max_n, int max_branches);

}  // namespace equichar
