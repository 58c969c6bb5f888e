#include "equichar/group.hpp"

#include <algorithm>

#include "equichar/error.hpp"

namespace equichar {

FiniteGroup::FiniteGroup(Kind kind, int param, int order, std::vector<int> table)
    : kind_(kind), param_(param), order_(order), table_(std::move(table)) {}

void FiniteGroup::finish() {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (multiply(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  abelian_ = true;
  for (int a = 0; a < order_ && abelian_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) {
        abelian_ = false;
        break;
      }
  classes_ = conjugacy_classes(*this);
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidData("cyclic group needs n >= 1, got " + std::to_string(n));
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(Kind::Cyclic, n, n, std::move(t)));
  g->finish();
  return g;
}

GroupPtr FiniteGroup::dihedral(int n) {
  if (n < 2) throw InvalidData("dihedral group needs n >= 2, got " + std::to_string(n));
  const int order = 2 * n;
  auto encode = [n](bool refl, int k) { return (refl ? n : 0) + ((k % n) + n) % n; };
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const bool sa = a >= n, sb = b >= n;
      const int ka = a % n, kb = b % n;
      // r^ka r^kb = r^(ka+kb);  r^ka s r^kb = s r^(kb-ka);
      // s r^ka r^kb = s r^(ka+kb);  s r^ka s r^kb = r^(kb-ka)
      t[a * order + b] = sb ? encode(!sa, kb - ka) : encode(sa, ka + kb);
    }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(Kind::Dihedral, n, order, std::move(t)));
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw InvalidData("explicit group table is empty");
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw InvalidData("explicit group table row " + std::to_string(a) + " has " +
                        std::to_string(rows[a].size()) + " entries, expected " + std::to_string(n));
    for (int b = 0; b < n; ++b) {
      const int v = rows[a][b];
      if (v < 0 || v >= n)
        throw InvalidData("explicit group table entry " + std::to_string(a) + "*" +
                          std::to_string(b) + " = " + std::to_string(v) + " is out of range");
      t.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return t[a * n + b]; };
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw InvalidData("element 0 is not an identity: fails at element " + std::to_string(a));
  // Latin square rows and columns give two-sided inverses once 0 is the identity.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[at(a, b)]++ || col_seen[at(b, a)]++)
        throw InvalidData("element " + std::to_string(a) + " is not invertible (row or column repeats)");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw InvalidData("table is not associative at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(Kind::Explicit, n, n, std::move(t)));
  g->finish();
  return g;
}

int FiniteGroup::power(int g, long long k) const {
  const int ord = element_order(g);
  long long e = k % ord;
  if (e < 0) e += ord;
  int out = 0;
  for (long long i = 0; i < e; ++i) out = multiply(out, g);
  return out;
}

int FiniteGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != 0) {
    x = multiply(x, g);
    ++k;
  }
  return k;
}

int FiniteGroup::conjugate(int g, int x) const { return multiply(multiply(inverse(x), g), x); }

std::string FiniteGroup::element_name(int g) const {
  switch (kind_) {
    case Kind::Cyclic:
      return g == 0 ? "1" : "g^" + std::to_string(g);
    case Kind::Dihedral:
      if (g == 0) return "1";
      if (g < param_) return "r^" + std::to_string(g);
      return "s r^" + std::to_string(g - param_);
    case Kind::Explicit:
      break;
  }
  return "e" + std::to_string(g);
}

std::string FiniteGroup::describe() const {
  switch (kind_) {
    case Kind::Cyclic:
      return "cyclic(" + std::to_string(param_) + ")";
    case Kind::Dihedral:
      return "dihedral(" + std::to_string(param_) + ")";
    case Kind::Explicit:
      break;
  }
  return "explicit(" + std::to_string(order_) + ")";
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && order_ == other.order_ && table_ == other.table_;
}

GroupPtr make_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case FiniteGroup::Kind::Cyclic:
      return FiniteGroup::cyclic(spec.n);
    case FiniteGroup::Kind::Dihedral:
      return FiniteGroup::dihedral(spec.n);
    case FiniteGroup::Kind::Explicit:
      break;
  }
  return FiniteGroup::from_table(spec.table);
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyClasses out;
  out.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (out.class_of[a] >= 0) continue;
    const int idx = out.count();
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      const int c = g.conjugate(a, x);
      if (out.class_of[c] < 0) {
        out.class_of[c] = idx;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.representative.push_back(a);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

CyclicSubgroup::CyclicSubgroup(GroupPtr parent, int generator)
    : parent_(std::move(parent)), generator_(generator) {
  if (!parent_->contains(generator))
    throw InvalidData("element " + std::to_string(generator) + " is not in " + parent_->describe());
  exponent_of_.assign(parent_->order(), -1);
  int x = 0;
  do {
    exponent_of_[x] = static_cast<int>(members_.size());
    members_.push_back(x);
    x = parent_->multiply(x, generator_);
  } while (x != 0);
  as_group_ = FiniteGroup::cyclic(order());
}

CyclicSubgroup cyclic_subgroup(const GroupPtr& g, int c) { return CyclicSubgroup(g, c); }

std::vector<int> left_cosets(const FiniteGroup& g, const CyclicSubgroup& h) {
  std::vector<char> used(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    reps.push_back(x);
    for (int m : h.members()) used[g.multiply(x, m)] = 1;
  }
  return reps;
}

}  // namespace equichar
