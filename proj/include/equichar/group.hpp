#pragma once

#include <memory>
#include <string>
#include <vector>

namespace equichar {

// Class partition of a finite group under conjugation. Each class is listed
// in increasing element order and its representative is its least element;
// classes are ordered by representative, so class 0 is {identity}.
struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> representative;
  std::vector<int> class_of;  // element -> class index

  int count() const { return static_cast<int>(classes.size()); }
  int size(int c) const { return static_cast<int>(classes[c].size()); }
};

// A finite group with elements 0..N-1 (0 the identity) and an explicit
// multiplication table.
//
// Dihedral groups D_n = <r, s | r^n = s^2 = 1, srs = r^-1> use the fixed
// encoding r^k -> k and s r^k -> n + k.
class FiniteGroup {
 public:
  enum class Kind { Cyclic, Dihedral, Explicit };

  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> dihedral(int n);
  // Validates the table; throws InvalidData naming the offending element or
  // triple when the table is not a group with identity 0.
  static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<int>> table);

  Kind kind() const { return kind_; }
  // n for cyclic(n) and dihedral(n); the order for explicit groups.
  int parameter() const { return param_; }
  int order() const { return order_; }
  int identity() const { return 0; }

  int multiply(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int g, long long k) const;
  int element_order(int g) const;
  int conjugate(int g, int x) const;  // x^-1 g x
  bool is_abelian() const { return abelian_; }
  bool contains(int g) const { return g >= 0 && g < order_; }

  const ConjugacyClasses& classes() const { return classes_; }
  int class_of(int g) const { return classes_.class_of[g]; }

  // "g^j", "r^k", "s r^k" or "e<index>".
  std::string element_name(int g) const;
  std::string describe() const;  // "cyclic(6)", "dihedral(5)", "explicit(4)"

  bool same_as(const FiniteGroup& other) const;

 private:
  FiniteGroup(Kind kind, int param, int order, std::vector<int> table);
  void finish();

  Kind kind_;
  int param_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  bool abelian_ = false;
  ConjugacyClasses classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Description of a group to build; see make_group.
struct GroupSpec {
  FiniteGroup::Kind kind = FiniteGroup::Kind::Cyclic;
  int n = 1;
  std::vector<std::vector<int>> table;  // explicit only
};

GroupPtr make_group(const GroupSpec& spec);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// The cyclic subgroup <c> of a parent group. Its members are listed as
// c^0, c^1, ..., c^(order-1); as_group() is cyclic(order) with element k
// standing for c^k, so class functions on the subgroup are class functions
// on that cyclic group.
class CyclicSubgroup {
 public:
  CyclicSubgroup(GroupPtr parent, int generator);

  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& as_group() const { return as_group_; }
  int generator() const { return generator_; }
  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int g) const { return exponent_of_[g] >= 0; }
  // k with g = c^k, or -1 when g is not in the subgroup.
  int exponent_of(int g) const { return exponent_of_[g]; }

 private:
  GroupPtr parent_;
  GroupPtr as_group_;
  int generator_;
  std::vector<int> members_;
  std::vector<int> exponent_of_;
};

CyclicSubgroup cyclic_subgroup(const GroupPtr& g, int c);

// Representatives of the left cosets xH, chosen greedily by least unused
// element index.
std::vector<int> left_cosets(const FiniteGroup& g, const CyclicSubgroup& h);

}  // namespace equichar
