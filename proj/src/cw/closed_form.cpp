#include "equichar/cw.hpp"
#include "equichar/error.hpp"

namespace equichar {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t unit_inverse(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  for (std::int64_t x = 1; x < n; ++x)
    if ((a * x) % n == 1) return x;
  throw InvalidData(std::to_string(a) + " is not a unit mod " + std::to_string(n));
}

// alpha with zeta_n^(j) = tau_p(c)^alpha where c = r^j (or g^j) has order n_p.
std::int64_t align(std::int64_t j, std::int64_t n, const BranchOrbit& o) {
  const std::int64_t step = j * o.order / n;  // exact: n / gcd(n, j) = N_p
  return mod(step * unit_inverse(o.rotation_exponent, o.order), o.order);
}

}  // namespace

std::int64_t cyclic_alignment(const Problem& problem, int orbit) {
  const FiniteGroup& g = *problem.group();
  if (g.kind() != FiniteGroup::Kind::Cyclic)
    throw UnsupportedCase("cyclic closed form needs a cyclic group, got " + g.describe());
  const BranchOrbit& o = problem.cover().orbits[orbit];
  return align(o.generator, g.order(), o);
}

Rational cyclic_closed_form(const Problem& problem, int orbit, std::int64_t k, std::int64_t alignment) {
  const BranchOrbit& o = problem.cover().orbits[orbit];
  const std::int64_t m = problem.bundle().fiber_exponents.at(o.id);
  return Rational(mod(alignment * k - m, o.order), o.order);
}

Rational dihedral_closed_form(const Problem& problem, int orbit, int target) {
  const FiniteGroup& g = *problem.group();
  if (g.kind() != FiniteGroup::Kind::Dihedral)
    throw UnsupportedCase("dihedral closed form needs a dihedral group, got " + g.describe());
  const int n = g.parameter();
  const BranchOrbit& o = problem.cover().orbits[orbit];
  if (o.generator >= n)
    throw UnsupportedCase("orbit " + o.id + " has a reflection stabilizer; no closed form is available");
  const std::int64_t np = o.order;
  const std::int64_t m = problem.bundle().fiber_exponents.at(o.id);
  const std::int64_t alpha = align(o.generator, n, o);

  const int linear = n % 2 == 0 ? 4 : 2;
  const int count = linear + (n - 1) / 2;
  if (target < 0 || target >= count)
    throw InvalidData("irreducible index " + std::to_string(target) + " out of range for " + g.describe());
  if (target < 2) return Rational(mod(-m, np), np);
  if (target < linear) return Rational(mod(alpha * (n / 2) - m, np), np);
  const std::int64_t h = target - linear + 1;
  return Rational(mod(alpha * h - m, np) + mod(-alpha * h - m, np), np);
}

}  // namespace equichar
