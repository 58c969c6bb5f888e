#pragma once

// Seeded generators of valid equivariant data for property tests.
//
// Branch data: pick a monodromy gamma != 1 and a unit a mod ord(gamma); the
// orbit has generator c = gamma^a and rotation exponent a, so tau(gamma) is
// exactly zeta. The product of the gammas must lie in [G, G] (a fix-up
// orbit for cyclic groups, rejection for dihedral ones).
//
// Bundles: K^t (x) O(sum_q c_q . orbit_q) (x) pi^*O(e . point) twisted by a
// one-dimensional character lambda. Fibre exponents m_q = t - c_q + e_q with
// lambda|G_q = tau^(e_q); degree t(2g-2) + sum_q c_q N/N_p + eN.

#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "equichar/cw.hpp"

namespace equichar::fixtures {

struct RandomCase {
  CoverData cover;
  BundleData bundle;
  std::string label;
};

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline GroupPtr random_group(std::mt19937_64& rng) {
  if (pick(rng, 0, 1) == 0) return FiniteGroup::cyclic(pick(rng, 2, 12));
  return FiniteGroup::dihedral(pick(rng, 2, 8));
}

inline bool in_commutator(const FiniteGroup& g, int x) {
  if (g.kind() == FiniteGroup::Kind::Cyclic) return x == g.identity();
  // [D_n, D_n] = <r^2>
  const int n = g.parameter();
  if (x >= n) return false;
  return n % 2 == 1 || x % 2 == 0;
}

inline BranchOrbit random_orbit(std::mt19937_64& rng, const FiniteGroup& g, int gamma, const std::string& id) {
  const int np = g.element_order(gamma);
  std::vector<int> units;
  for (int a = 1; a < np; ++a)
    if (std::gcd(a, np) == 1) units.push_back(a);
  const int a = units[pick(rng, 0, static_cast<int>(units.size()) - 1)];
  return BranchOrbit{id, g.power(gamma, a), np, a};
}

// lambda(c) = zeta_{N_p}^(a e), solved by search over e.
inline std::int64_t twist_exponent(const BranchOrbit& o, const ClassFunction& lambda) {
  for (int e = 0; e < o.order; ++e)
    if (fiber_value(o, e, 1) == lambda(o.generator)) return e;
  throw std::logic_error("one-dimensional character is not a power of tau on a stabilizer");
}

inline BundleData random_bundle(std::mt19937_64& rng, const CoverData& cover) {
  const CharacterTable table = irreducible_table(cover.group);
  std::vector<int> linear;
  for (int x = 0; x < table.size(); ++x)
    if (table.degrees[x] == 1) linear.push_back(x);
  const ClassFunction& lambda = table.irreducibles[linear[pick(rng, 0, static_cast<int>(linear.size()) - 1)]];
  const std::int64_t g = total_genus(cover);
  const int t = pick(rng, 0, 2);
  const int e = pick(rng, -1, 2);
  std::int64_t degree = t * (2 * g - 2) + static_cast<std::int64_t>(e) * cover.group->order();
  std::map<std::string, std::int64_t> ex;
  for (int q = 0; q < static_cast<int>(cover.orbits.size()); ++q) {
    const int c = pick(rng, -2, 2);
    degree += c * cover.orbit_size(q);
    ex[cover.orbits[q].id] = t - c + twist_exponent(cover.orbits[q], lambda);
  }
  return make_bundle(cover, degree, ex);
}

inline std::optional<CoverData> random_cover(std::mt19937_64& rng, const GroupPtr& group) {
  const FiniteGroup& g = *group;
  CoverData c;
  c.group = group;
  c.quotient_genus = pick(rng, 0, 2);
  const int count = pick(rng, c.quotient_genus == 0 ? 2 : 0, 4);
  int product = g.identity();
  for (int q = 0; q < count; ++q) {
    const int gamma = pick(rng, 1, g.order() - 1);
    product = g.multiply(product, gamma);
    c.orbits.push_back(random_orbit(rng, g, gamma, "q" + std::to_string(q + 1)));
  }
  if (g.kind() == FiniteGroup::Kind::Cyclic && product != g.identity())
    c.orbits.push_back(random_orbit(rng, g, g.inverse(product), "q" + std::to_string(count + 1)));
  else if (!in_commutator(g, product))
    return std::nullopt;
  if (!validate_cover(c).ok()) return std::nullopt;
  return c;
}

// A valid cover over a cyclic or dihedral group together with a bundle.
inline RandomCase random_case(std::mt19937_64& rng) {
  while (true) {
    const GroupPtr group = random_group(rng);
    auto cover = random_cover(rng, group);
    if (!cover) continue;
    RandomCase out{*cover, random_bundle(rng, *cover), {}};
    out.label = group->describe() + " h=" + std::to_string(cover->quotient_genus) + " orbits=" +
                std::to_string(cover->orbits.size()) + " deg=" + std::to_string(out.bundle.degree);
    return out;
  }
}

// No branch orbits, quotient genus >= 1, deg L = N k.
inline RandomCase random_free_case(std::mt19937_64& rng) {
  CoverData c;
  c.group = random_group(rng);
  c.quotient_genus = pick(rng, 1, 3);
  const std::int64_t k = pick(rng, -2, 3);
  RandomCase out{c, make_bundle(c, k * c.group->order(), {}), {}};
  out.label = c.group->describe() + " free h=" + std::to_string(c.quotient_genus) + " k=" + std::to_string(k);
  return out;
}

// Residues r_q with sum_q r_q N/N_p = -deg L; the last orbit absorbs the
// remainder. Requires at least one orbit.
inline ResidueAssignment random_residues(std::mt19937_64& rng, const Problem& p) {
  ResidueAssignment out;
  const CoverData& c = p.cover();
  Rational used;
  for (int q = 0; q + 1 < p.orbit_count(); ++q) {
    const Rational r(pick(rng, -30, 30), pick(rng, 1, 7));
    out[c.orbits[q].id] = r;
    used += r * c.orbit_size(q);
  }
  const int last = p.orbit_count() - 1;
  out[c.orbits[last].id] = (-Rational(p.bundle().degree) - used) / Rational(c.orbit_size(last));
  return out;
}

}  // namespace equichar::fixtures
