#include <gtest/gtest.h>

#include "equichar/cover.hpp"
#include "equichar/error.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;

namespace {

CoverData hyperelliptic(int branch_points) {
  CoverData c;
  c.group = FiniteGroup::cyclic(2);
  for (int i = 0; i < branch_points; ++i) c.orbits.push_back({"p" + std::to_string(i), 1, 2, 1});
  return c;
}

bool has_text(const std::vector<std::string>& lines, const std::string& needle) {
  for (const auto& l : lines)
    if (l.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Cover, RiemannHurwitzGenus) {
  EXPECT_EQ(total_genus(hyperelliptic(6)), 2);
  EXPECT_EQ(ramification_degree(hyperelliptic(6)), 6);

  // D3 over P^1: two reflection orbits (3 points each) and one rotation orbit
  CoverData d3;
  d3.group = FiniteGroup::dihedral(3);
  d3.orbits = {{"a", 3, 2, 1}, {"b", 4, 2, 1}, {"c", 1, 3, 1}};
  EXPECT_EQ(ramification_degree(d3), 10);
  EXPECT_EQ(total_genus(d3), 0);

  CoverData free;
  free.group = FiniteGroup::cyclic(5);
  free.quotient_genus = 3;
  EXPECT_EQ(total_genus(free), 11);
}

TEST(Cover, ValidationRejectsBadData) {
  EXPECT_TRUE(validate_cover(hyperelliptic(6)).ok());

  CoverData c;
  c.group = FiniteGroup::cyclic(4);
  c.orbits = {{"p", 1, 4, 2}, {"q", 3, 4, 1}};
  auto rep = validate_cover(c);
  ASSERT_FALSE(rep.ok());
  EXPECT_TRUE(has_text(rep.errors, "not a unit")) << rep.errors.front();

  // one orbit of order 3 over P^1: 2g - 2 = -6 + 2
  CoverData lone;
  lone.group = FiniteGroup::cyclic(3);
  lone.orbits = {{"p", 1, 3, 1}};
  EXPECT_FALSE(validate_cover(lone).ok());
  EXPECT_THROW(require_valid_cover(lone), InvalidData);
  EXPECT_THROW(total_genus(lone), InvalidData);

  // odd right-hand side: three branch points of a double cover
  EXPECT_THROW(total_genus(hyperelliptic(3)), InvalidData);

  CoverData wrong_order = hyperelliptic(2);
  wrong_order.orbits[0].order = 3;
  EXPECT_TRUE(has_text(validate_cover(wrong_order).errors, "has order 2, declared 3"));

  CoverData dup = hyperelliptic(2);
  dup.orbits[1].id = dup.orbits[0].id;
  EXPECT_TRUE(has_text(validate_cover(dup).errors, "duplicate id"));

  CoverData stray = hyperelliptic(2);
  stray.orbits[0].generator = 7;
  EXPECT_TRUE(has_text(validate_cover(stray).errors, "not a group element"));

  CoverData trivial_stab = hyperelliptic(2);
  trivial_stab.orbits[0] = {"p0", 0, 1, 1};
  EXPECT_FALSE(validate_cover(trivial_stab).ok());

  CoverData negative = hyperelliptic(2);
  negative.quotient_genus = -1;
  EXPECT_FALSE(validate_cover(negative).ok());
}

TEST(Cover, AbelianMonodromyWarningIsAdvisory) {
  CoverData c;
  c.group = FiniteGroup::cyclic(3);
  c.orbits = {{"p", 1, 3, 1}, {"q", 1, 3, 1}};
  auto rep = validate_cover(c);
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.warnings.size(), 1u);
  EXPECT_TRUE(has_text(rep.warnings, "product of branch monodromies"));

  c.orbits[1].generator = 2;
  EXPECT_TRUE(validate_cover(c).warnings.empty());
  // generator g^2 with rotation exponent 2 has monodromy g^(2 * 2^-1) = g
  c.orbits[1].rotation_exponent = 2;
  EXPECT_FALSE(validate_cover(c).warnings.empty());
}

TEST(Cover, NoFalseWarningForNonFreeStabilizers) {
  // y^4 = x (x - 1) (x - 2)^2: the last point has stabilizer <sigma^2>
  const SuperellipticCurve curve(4, {{0, 1}, {1, 1}, {2, 2}});
  const CoverData c = build_cover(curve);
  const auto rep = validate_cover(c);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.warnings.empty()) << rep.warnings.front();
  for (const SuperellipticCurve& k : enumerate_curves(6, 4))
    EXPECT_TRUE(validate_cover(build_cover(k)).warnings.empty()) << k.describe();
}

TEST(Cover, BundlesAndLocalValues) {
  const CoverData c = hyperelliptic(6);
  const BundleData k = canonical_bundle(c, 1);
  EXPECT_EQ(k.degree, 2);
  for (const auto& [id, m] : k.fiber_exponents) EXPECT_EQ(m, 1) << id;
  EXPECT_EQ(canonical_bundle(c, 3).fiber_exponents.at("p0"), 1);  // reduced mod 2
  EXPECT_EQ(trivial_bundle(c).degree, 0);

  std::map<std::string, std::int64_t> ex;
  for (const auto& o : c.orbits) ex[o.id] = -3;
  EXPECT_EQ(make_bundle(c, 4, ex).fiber_exponents.at("p5"), 1);
  ex.erase("p5");
  EXPECT_THROW(make_bundle(c, 4, ex), ParseError);
  ex["p5"] = 0;
  ex["elsewhere"] = 0;
  EXPECT_THROW(make_bundle(c, 4, ex), ParseError);

  const BranchOrbit o{"q", 1, 5, 2};
  EXPECT_EQ(rotation_value(o, 1), Cyclotomic::root_of_unity(5, 2));
  EXPECT_EQ(rotation_value(o, -1), Cyclotomic::root_of_unity(5, 3));
  EXPECT_EQ(fiber_value(o, 3, 1), Cyclotomic::root_of_unity(5, 1));
  EXPECT_EQ(fiber_value(o, 0, 4), Cyclotomic(1));
}
