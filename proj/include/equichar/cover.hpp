#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equichar/cyclotomic.hpp"
#include "equichar/group.hpp"

namespace equichar {

// One G-orbit of points with nontrivial stabilizer, described from the
// quotient side. The chosen point p has stabilizer <generator> of the given
// order, and the rotation character is tau_p(generator^k) = zeta_order^(a k)
// with a = rotation_exponent.
struct BranchOrbit {
  std::string id;
  int generator = 0;
  int order = 2;
  int rotation_exponent = 1;

  bool operator==(const BranchOrbit&) const = default;
};

struct CoverData {
  GroupPtr group;
  std::int64_t quotient_genus = 0;
  std::vector<BranchOrbit> orbits;

  int orbit_index(const std::string& id) const;  // -1 if absent
  std::int64_t orbit_size(int i) const { return group->order() / orbits[i].order; }
};

// Equivariant line bundle shadow: deg L and, per orbit, m with nu_p = tau_p^m.
// Exponents are kept reduced into [0, N_p).
struct BundleData {
  std::int64_t degree = 0;
  std::map<std::string, std::int64_t> fiber_exponents;

  bool operator==(const BundleData&) const = default;
};

std::int64_t ramification_degree(const CoverData& cover);

// Riemann-Hurwitz: 2 g_X - 2 = N (2h - 2) + deg R. Throws InvalidData when
// the right-hand side is odd or below -2.
std::int64_t total_genus(const CoverData& cover);

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

ValidationReport validate_cover(const CoverData& cover);
// Throws InvalidData with the first error of validate_cover.
void require_valid_cover(const CoverData& cover);

// Builds a bundle, reducing exponents mod N_p. Throws ParseError when an
// orbit has no exponent or an unknown orbit id appears.
BundleData make_bundle(const CoverData& cover, std::int64_t degree,
                       const std::map<std::string, std::int64_t>& exponents);

// K^t: degree t (2 g_X - 2), nu_p = tau_p^t everywhere.
BundleData canonical_bundle(const CoverData& cover, std::int64_t t);
BundleData trivial_bundle(const CoverData& cover);

CyclicSubgroup stabilizer(const CoverData& cover, int orbit);
// tau_p and nu_p as values at generator^k.
Cyclotomic rotation_value(const BranchOrbit& orbit, std::int64_t k);
Cyclotomic fiber_value(const BranchOrbit& orbit, std::int64_t m, std::int64_t k);

}  // namespace equichar
