#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equichar/cyclotomic.hpp"
#include "equichar/group.hpp"

namespace equichar {

// A cyclotomic-valued function on a group that is constant on conjugacy
// classes, stored as one value per class (in the group's class order).
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values);
  static ClassFunction zero(GroupPtr group);
  // Builds from a per-element function; throws InvalidData when the values
  // are not constant on classes.
  static ClassFunction from_elements(GroupPtr group, const std::vector<Cyclotomic>& element_values);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_class(int c) const { return values_[c]; }
  const Cyclotomic& operator()(int g) const { return values_[group_->class_of(g)]; }
  Cyclotomic degree() const { return values_[0]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction scaled(const Cyclotomic& s) const;
  ClassFunction conj() const;
  bool operator==(const ClassFunction& o) const;

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

// <chi, eta> = (1/N) sum_g chi(g) conj(eta(g)), evaluated classwise.
// Throws GroupMismatch.
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& eta);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::string> names;
  std::vector<int> degrees;

  int size() const { return static_cast<int>(irreducibles.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
};

// Built-in tables for cyclic and dihedral groups, in canonical order:
//   cyclic(N):   xi^0 .. xi^(N-1), xi^k(g^j) = zeta_N^(jk)
//   dihedral(n): psi1, psi2 (psi3, psi4 for even n), chi1 .. chi_{ceil(n/2)-1}
// Explicit groups have no built-in table (throws InvalidData).
CharacterTable irreducible_table(const GroupPtr& group);

struct SuppliedIrreducible {
  std::string name;
  int degree = 0;
  std::vector<Cyclotomic> class_values;  // aligned with supplied_classes
};

// Checks a user supplied table for an explicit group: the classes must be
// the actual conjugacy classes (any order), the table must be square,
// orthonormal and satisfy sum of squared degrees = N. Throws InvalidData
// naming the violated relation.
CharacterTable supplied_table(const GroupPtr& group, const std::vector<std::vector<int>>& supplied_classes,
                              const std::vector<SuppliedIrreducible>& irreducibles);

// Re-checks orthonormality, degree sum and class count.
void validate_table(const CharacterTable& table);

ClassFunction restrict_to(const ClassFunction& chi, const CyclicSubgroup& h);
// Ind_H^G: Ind chi(g) = (1/|H|) sum over x in G with x^-1 g x in H of chi(x^-1 g x).
ClassFunction induce(const ClassFunction& chi_on_h, const CyclicSubgroup& h);
ClassFunction regular_character(const GroupPtr& group);

// Fourier coefficients <eta, xi> over the table.
std::vector<Cyclotomic> decompose(const ClassFunction& eta, const CharacterTable& table);
ClassFunction recombine(const std::vector<Cyclotomic>& coeffs, const CharacterTable& table);

// Integer combination of irreducibles, in table order.
struct VirtualCharacter {
  std::vector<std::int64_t> coeffs;

  ClassFunction to_class_function(const CharacterTable& table) const;
};

// Returns the virtual character when every coefficient is a rational integer.
std::optional<VirtualCharacter> as_virtual_character(const std::vector<Cyclotomic>& coeffs);

}  // namespace equichar
