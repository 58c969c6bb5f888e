#include <gtest/gtest.h>

#include <set>

#include "equichar/error.hpp"
#include "equichar/group.hpp"
#include "support/quaternion.hpp"

using namespace equichar;

namespace {

void expect_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.multiply(0, a), a);
    EXPECT_EQ(g.multiply(a, 0), a);
    EXPECT_EQ(g.multiply(a, g.inverse(a)), 0);
    EXPECT_EQ(g.power(a, g.element_order(a)), 0);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
  }
}

}  // namespace

TEST(Group, CyclicAndDihedralSatisfyAxioms) {
  for (int n = 1; n <= 8; ++n) expect_group_axioms(*FiniteGroup::cyclic(n));
  for (int n = 2; n <= 7; ++n) expect_group_axioms(*FiniteGroup::dihedral(n));
}

TEST(Group, DihedralEncodingProducts) {
  const auto d = FiniteGroup::dihedral(5);
  const int s = 5, sr = 6;
  EXPECT_EQ(d->multiply(s, sr), 1);       // s (s r) = r
  EXPECT_EQ(d->multiply(sr, s), 4);       // (s r) s = r^-1
  EXPECT_EQ(d->multiply(1, s), 9);        // r s = s r^-1
  EXPECT_EQ(d->multiply(sr, sr), 0);      // reflections are involutions
  EXPECT_EQ(d->conjugate(1, s), 4);       // s^-1 r s = r^-1
  EXPECT_EQ(d->element_name(7), "s r^2");
  EXPECT_EQ(d->element_name(3), "r^3");
  EXPECT_EQ(d->element_name(0), "1");
}

TEST(Group, ConjugacyClassCounts) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(FiniteGroup::cyclic(n)->classes().count(), n);
  for (int n = 2; n <= 10; ++n) {
    const int expect = n % 2 == 1 ? (n + 3) / 2 : n / 2 + 3;
    EXPECT_EQ(FiniteGroup::dihedral(n)->classes().count(), expect) << n;
  }
  const auto d4 = FiniteGroup::dihedral(4);
  const auto& cc = d4->classes();
  EXPECT_EQ(cc.representative[0], 0);
  for (int c = 0; c < cc.count(); ++c) EXPECT_EQ(cc.representative[c], cc.classes[c].front());
  EXPECT_EQ(cc.classes[d4->class_of(2)], std::vector<int>{2});  // r^2 is central
}

TEST(Group, ExplicitTableAccepted) {
  const auto q = FiniteGroup::from_table(fixtures::quaternion_table());
  expect_group_axioms(*q);
  EXPECT_FALSE(q->is_abelian());
  EXPECT_EQ(q->classes().count(), 5);
  EXPECT_EQ(q->element_order(2), 4);
  EXPECT_EQ(q->element_name(5), "e5");
  EXPECT_EQ(q->describe(), "explicit(8)");
}

TEST(Group, ExplicitTableRejections) {
  EXPECT_THROW(FiniteGroup::from_table({}), InvalidData);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidData);
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidData);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 2}}), InvalidData);
  // a Latin square with identity 0 that is not associative
  const std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL() << "non-associative table accepted";
  } catch (const InvalidData& e) {
    EXPECT_NE(std::string(e.what()).find("associative"), std::string::npos);
  }
  EXPECT_THROW(FiniteGroup::cyclic(0), InvalidData);
  EXPECT_THROW(FiniteGroup::dihedral(1), InvalidData);
}

TEST(Group, CyclicSubgroupsAndCosets) {
  const auto d6 = FiniteGroup::dihedral(6);
  const CyclicSubgroup h(d6, 2);  // <r^2>
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.members(), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(h.exponent_of(4), 2);
  EXPECT_EQ(h.exponent_of(1), -1);
  EXPECT_EQ(h.as_group()->describe(), "cyclic(3)");
  const auto cosets = left_cosets(*d6, h);
  ASSERT_EQ(cosets.size(), 4u);
  std::set<int> covered;
  for (int x : cosets)
    for (int m : h.members()) EXPECT_TRUE(covered.insert(d6->multiply(x, m)).second);
  EXPECT_EQ(covered.size(), 12u);
}
