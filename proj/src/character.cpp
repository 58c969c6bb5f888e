#include "equichar/character.hpp"

#include <algorithm>
#include <set>

#include "equichar/error.hpp"

namespace equichar {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw GroupMismatch();
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (static_cast<int>(values_.size()) != group_->classes().count())
    throw InvalidData("class function on " + group_->describe() + " needs " +
                      std::to_string(group_->classes().count()) + " values, got " +
                      std::to_string(values_.size()));
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const int k = group->classes().count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(k));
}

ClassFunction ClassFunction::from_elements(GroupPtr group, const std::vector<Cyclotomic>& element_values) {
  const auto& cc = group->classes();
  std::vector<Cyclotomic> vals;
  vals.reserve(cc.count());
  for (int c = 0; c < cc.count(); ++c) {
    const Cyclotomic& v = element_values[cc.representative[c]];
    for (int g : cc.classes[c])
      if (!(element_values[g] == v))
        throw InvalidData("function is not constant on the class of " + group->element_name(g));
    vals.push_back(v);
  }
  return ClassFunction(std::move(group), std::move(vals));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_group(group_, o.group_);
  std::vector<Cyclotomic> out = values_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.values_[i];
  return ClassFunction(group_, std::move(out));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + o.scaled(-1); }

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  require_same_group(group_, o.group_);
  std::vector<Cyclotomic> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * o.values_[i];
  return ClassFunction(group_, std::move(out));
}

ClassFunction ClassFunction::scaled(const Cyclotomic& s) const {
  std::vector<Cyclotomic> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * s;
  return ClassFunction(group_, std::move(out));
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i].conj();
  return ClassFunction(group_, std::move(out));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group_ && o.group_ && group_->same_as(*o.group_) && values_ == o.values_;
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& eta) {
  require_same_group(chi.group(), eta.group());
  const auto& cc = chi.group()->classes();
  Cyclotomic sum;
  for (int c = 0; c < cc.count(); ++c) {
    const Cyclotomic& a = chi.at_class(c);
    const Cyclotomic& b = eta.at_class(c);
    if (a.is_zero() || b.is_zero()) continue;
    sum += (a * b.conj()) * Rational(cc.size(c));
  }
  return sum * Rational(1, chi.group()->order());
}

int CharacterTable::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

namespace {

CharacterTable cyclic_table(const GroupPtr& g) {
  const int n = g->order();
  CharacterTable t{g, {}, {}, {}};
  for (int k = 0; k < n; ++k) {
    std::vector<Cyclotomic> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(j) * k);
    t.irreducibles.emplace_back(g, std::move(vals));  // classes of a cyclic group are singletons
    if (k == 0)
      t.names.emplace_back("trivial");
    else if (n == 2)
      t.names.emplace_back("sign");
    else
      t.names.push_back("xi^" + std::to_string(k));
    t.degrees.push_back(1);
  }
  return t;
}

CharacterTable dihedral_table(const GroupPtr& g) {
  const int n = g->parameter();
  const int order = g->order();
  CharacterTable t{g, {}, {}, {}};
  auto add = [&](std::string name, int degree, auto value_at) {
    std::vector<Cyclotomic> vals(order);
    for (int k = 0; k < n; ++k) {
      vals[k] = value_at(false, k);
      vals[n + k] = value_at(true, k);
    }
    t.irreducibles.push_back(ClassFunction::from_elements(g, vals));
    t.names.push_back(std::move(name));
    t.degrees.push_back(degree);
  };
  auto sgn = [](int k) { return Cyclotomic(k % 2 == 0 ? 1 : -1); };
  add("psi1", 1, [](bool, int) { return Cyclotomic(1); });
  add("psi2", 1, [](bool refl, int) { return Cyclotomic(refl ? -1 : 1); });
  if (n % 2 == 0) {
    add("psi3", 1, [&](bool, int k) { return sgn(k); });
    add("psi4", 1, [&](bool refl, int k) { return refl ? sgn(k + 1) : sgn(k); });
  }
  for (int h = 1; 2 * h < n; ++h) {
    add("chi" + std::to_string(h), 2, [&](bool refl, int k) {
      if (refl) return Cyclotomic(0);
      return Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(h) * k) +
             Cyclotomic::root_of_unity(n, -static_cast<std::int64_t>(h) * k);
    });
  }
  return t;
}

}  // namespace

CharacterTable irreducible_table(const GroupPtr& group) {
  switch (group->kind()) {
    case FiniteGroup::Kind::Cyclic:
      return cyclic_table(group);
    case FiniteGroup::Kind::Dihedral:
      return dihedral_table(group);
    case FiniteGroup::Kind::Explicit:
      break;
  }
  throw InvalidData("explicit groups must supply their character table");
}

void validate_table(const CharacterTable& t) {
  const int classes = t.group->classes().count();
  if (t.size() != classes)
    throw InvalidData("character table has " + std::to_string(t.size()) + " irreducibles but the group has " +
                      std::to_string(classes) + " conjugacy classes");
  long long deg_sum = 0;
  for (int i = 0; i < t.size(); ++i) {
    const auto d = t.irreducibles[i].degree().integer_value();
    if (!d || *d != t.degrees[i])
      throw InvalidData("declared degree of " + t.names[i] + " does not match its value at 1");
    deg_sum += static_cast<long long>(*d) * *d;
  }
  if (deg_sum != t.group->order())
    throw InvalidData("sum of squared degrees is " + std::to_string(deg_sum) + ", expected " +
                      std::to_string(t.group->order()));
  for (int i = 0; i < t.size(); ++i)
    for (int j = i; j < t.size(); ++j) {
      const Cyclotomic ip = inner_product(t.irreducibles[i], t.irreducibles[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0)))
        throw InvalidData("orthonormality fails: <" + t.names[i] + ", " + t.names[j] + "> = " + ip.str());
    }
}

CharacterTable supplied_table(const GroupPtr& group, const std::vector<std::vector<int>>& supplied_classes,
                              const std::vector<SuppliedIrreducible>& irreducibles) {
  const auto& cc = group->classes();
  if (static_cast<int>(supplied_classes.size()) != cc.count())
    throw InvalidData("supplied " + std::to_string(supplied_classes.size()) + " classes, the group has " +
                      std::to_string(cc.count()));
  // supplied position -> actual class index
  std::vector<int> actual(supplied_classes.size(), -1);
  std::set<int> hit;
  for (std::size_t i = 0; i < supplied_classes.size(); ++i) {
    std::vector<int> cls = supplied_classes[i];
    std::sort(cls.begin(), cls.end());
    if (cls.empty() || !group->contains(cls.front()) || !group->contains(cls.back()))
      throw InvalidData("supplied class " + std::to_string(i) + " has elements outside the group");
    const int c = group->class_of(cls.front());
    if (cls != cc.classes[c] || !hit.insert(c).second)
      throw InvalidData("supplied class " + std::to_string(i) + " is not a conjugacy class");
    actual[i] = c;
  }
  CharacterTable t{group, {}, {}, {}};
  for (const auto& irr : irreducibles) {
    if (irr.class_values.size() != supplied_classes.size())
      throw InvalidData("irreducible " + irr.name + " has " + std::to_string(irr.class_values.size()) +
                        " values, expected one per class");
    std::vector<Cyclotomic> vals(cc.count());
    for (std::size_t i = 0; i < actual.size(); ++i) vals[actual[i]] = irr.class_values[i];
    t.irreducibles.emplace_back(group, std::move(vals));
    t.names.push_back(irr.name);
    t.degrees.push_back(irr.degree);
  }
  validate_table(t);
  return t;
}

ClassFunction restrict_to(const ClassFunction& chi, const CyclicSubgroup& h) {
  require_same_group(chi.group(), h.parent());
  std::vector<Cyclotomic> vals;
  vals.reserve(h.order());
  for (int g : h.members()) vals.push_back(chi(g));
  return ClassFunction(h.as_group(), std::move(vals));
}

ClassFunction induce(const ClassFunction& chi_on_h, const CyclicSubgroup& h) {
  require_same_group(chi_on_h.group(), h.as_group());
  const FiniteGroup& g = *h.parent();
  const auto& cc = g.classes();
  std::vector<Cyclotomic> vals(cc.count());
  const Rational scale(1, h.order());
  for (int c = 0; c < cc.count(); ++c) {
    const int rep = cc.representative[c];
    // x^-1 rep x ranges over the class of rep, each element hit |C(rep)| times.
    std::vector<int> hits(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) ++hits[g.conjugate(rep, x)];
    Cyclotomic sum;
    for (int y : cc.classes[c]) {
      const int k = h.exponent_of(y);
      if (k >= 0) sum += chi_on_h(k) * Rational(hits[y]);
    }
    vals[c] = sum * scale;
  }
  return ClassFunction(h.parent(), std::move(vals));
}

ClassFunction regular_character(const GroupPtr& group) {
  std::vector<Cyclotomic> vals(group->classes().count());
  vals[0] = group->order();
  return ClassFunction(group, std::move(vals));
}

std::vector<Cyclotomic> decompose(const ClassFunction& eta, const CharacterTable& table) {
  std::vector<Cyclotomic> out;
  out.reserve(table.size());
  for (const auto& xi : table.irreducibles) out.push_back(inner_product(eta, xi));
  return out;
}

ClassFunction recombine(const std::vector<Cyclotomic>& coeffs, const CharacterTable& table) {
  ClassFunction sum = ClassFunction::zero(table.group);
  for (int i = 0; i < table.size(); ++i)
    if (!coeffs[i].is_zero()) sum = sum + table.irreducibles[i].scaled(coeffs[i]);
  return sum;
}

ClassFunction VirtualCharacter::to_class_function(const CharacterTable& table) const {
  ClassFunction sum = ClassFunction::zero(table.group);
  for (int i = 0; i < table.size(); ++i)
    if (coeffs[i] != 0) sum = sum + table.irreducibles[i].scaled(Cyclotomic(coeffs[i]));
  return sum;
}

std::optional<VirtualCharacter> as_virtual_character(const std::vector<Cyclotomic>& coeffs) {
  VirtualCharacter v;
  for (const auto& c : coeffs) {
    auto i = c.integer_value();
    if (!i) return std::nullopt;
    v.coeffs.push_back(*i);
  }
  return v;
}

}  // namespace equichar
