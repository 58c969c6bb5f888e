#include "equichar/cover.hpp"

#include <numeric>
#include <set>

#include "equichar/error.hpp"

namespace equichar {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int CoverData::orbit_index(const std::string& id) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].id == id) return static_cast<int>(i);
  return -1;
}

std::int64_t ramification_degree(const CoverData& cover) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < cover.orbits.size(); ++i)
    r += cover.orbit_size(static_cast<int>(i)) * (cover.orbits[i].order - 1);
  return r;
}

std::int64_t total_genus(const CoverData& cover) {
  const std::int64_t rhs = cover.group->order() * (2 * cover.quotient_genus - 2) + ramification_degree(cover);
  if (rhs % 2 != 0)
    throw InvalidData("Riemann-Hurwitz gives 2g-2 = " + std::to_string(rhs) + ", which is odd");
  if (rhs < -2)
    throw InvalidData("Riemann-Hurwitz gives 2g-2 = " + std::to_string(rhs) + ", so the genus would be negative");
  return rhs / 2 + 1;
}

ValidationReport validate_cover(const CoverData& cover) {
  ValidationReport rep;
  const FiniteGroup& g = *cover.group;
  if (cover.quotient_genus < 0) rep.errors.push_back("quotient genus must be >= 0");
  std::set<std::string> ids;
  bool orbits_ok = true;
  for (const auto& o : cover.orbits) {
    const std::string where = "orbit " + o.id + ": ";
    if (!ids.insert(o.id).second) rep.errors.push_back(where + "duplicate id");
    if (!g.contains(o.generator)) {
      rep.errors.push_back(where + "generator is not a group element");
      orbits_ok = false;
      continue;
    }
    if (o.order < 2) {
      rep.errors.push_back(where + "stabilizer order must be >= 2 (drop unramified orbits)");
      orbits_ok = false;
      continue;
    }
    const int actual = g.element_order(o.generator);
    if (actual != o.order) {
      rep.errors.push_back(where + "generator " + g.element_name(o.generator) + " has order " +
                           std::to_string(actual) + ", declared " + std::to_string(o.order));
      orbits_ok = false;
    }
    if (std::gcd(o.rotation_exponent, o.order) != 1) {
      rep.errors.push_back(where + "rotation exponent " + std::to_string(o.rotation_exponent) +
                           " is not a unit mod " + std::to_string(o.order) + " (rotation not faithful)");
      orbits_ok = false;
    }
  }
  if (!orbits_ok || cover.quotient_genus < 0) return rep;
  try {
    total_genus(cover);
  } catch (const InvalidData& e) {
    rep.errors.emplace_back(e.what());
  }
  if (g.is_abelian()) {
    // Branch monodromies gamma_q (tau(gamma_q) = zeta_{N_p}) multiply to 1.
    int prod = g.identity();
    for (const auto& o : cover.orbits) {
      const std::int64_t a = mod(o.rotation_exponent, o.order);
      int inv = 1;
      while ((inv * a) % o.order != 1) ++inv;
      prod = g.multiply(prod, g.power(o.generator, inv));
    }
    if (prod != g.identity())
      rep.warnings.push_back("product of branch monodromies is " + g.element_name(prod) +
                             ", not 1: no such abelian cover exists");
  }
  return rep;
}

void require_valid_cover(const CoverData& cover) {
  ValidationReport rep = validate_cover(cover);
  if (!rep.ok()) throw InvalidData(rep.errors.front());
}

BundleData make_bundle(const CoverData& cover, std::int64_t degree,
                       const std::map<std::string, std::int64_t>& exponents) {
  BundleData b;
  b.degree = degree;
  for (const auto& [id, m] : exponents) {
    const int i = cover.orbit_index(id);
    if (i < 0) throw ParseError("bundle.fiber_exponents: unknown orbit id \"" + id + "\"");
    b.fiber_exponents[id] = mod(m, cover.orbits[i].order);
  }
  for (const auto& o : cover.orbits)
    if (!b.fiber_exponents.count(o.id))
      throw ParseError("bundle.fiber_exponents: missing exponent for orbit \"" + o.id + "\"");
  return b;
}

BundleData canonical_bundle(const CoverData& cover, std::int64_t t) {
  std::map<std::string, std::int64_t> ex;
  for (const auto& o : cover.orbits) ex[o.id] = t;
  return make_bundle(cover, t * (2 * total_genus(cover) - 2), ex);
}

BundleData trivial_bundle(const CoverData& cover) {
  std::map<std::string, std::int64_t> ex;
  for (const auto& o : cover.orbits) ex[o.id] = 0;
  return make_bundle(cover, 0, ex);
}

CyclicSubgroup stabilizer(const CoverData& cover, int orbit) {
  return CyclicSubgroup(cover.group, cover.orbits[orbit].generator);
}

Cyclotomic rotation_value(const BranchOrbit& orbit, std::int64_t k) {
  return Cyclotomic::root_of_unity(orbit.order, mod(orbit.rotation_exponent * k, orbit.order));
}

Cyclotomic fiber_value(const BranchOrbit& orbit, std::int64_t m, std::int64_t k) {
  return Cyclotomic::root_of_unity(orbit.order, mod(orbit.rotation_exponent * mod(m * k, orbit.order), orbit.order));
}

}  // namespace equichar
