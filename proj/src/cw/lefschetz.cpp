#include "equichar/cw.hpp"
#include "equichar/error.hpp"

namespace equichar {

LefschetzEvaluator::LefschetzEvaluator(const Problem& problem) : problem_(&problem) {
  const FiniteGroup& g = *problem.group();
  for (int q = 0; q < problem.orbit_count(); ++q) {
    const BranchOrbit& o = problem.cover().orbits[q];
    const std::int64_t m = problem.bundle().fiber_exponents.at(o.id);
    OrbitTerms t{stabilizer(problem.cover(), q), {}, {}};
    t.cosets = left_cosets(g, t.stabilizer);
    t.term.resize(o.order);
    for (int k = 1; k < o.order; ++k)
      t.term[k] = fiber_value(o, m, k) / (Cyclotomic(1) - rotation_value(o, k));
    orbits_.push_back(std::move(t));
  }
}

Cyclotomic LefschetzEvaluator::value(int g) const {
  const FiniteGroup& grp = *problem_->group();
  if (!grp.contains(g)) throw InvalidData("element " + std::to_string(g) + " is not in " + grp.describe());
  if (g == grp.identity()) throw InvalidData("the fixed-point formula does not apply to the identity");
  Cyclotomic sum;
  for (const auto& t : orbits_) {
    // g fixes x.p exactly when x^-1 g x lies in G_p.
    for (int x : t.cosets) {
      const int k = t.stabilizer.exponent_of(grp.conjugate(g, x));
      if (k > 0) sum += t.term[k];
    }
  }
  return sum;
}

int LefschetzEvaluator::fixed_point_count(int g) const {
  const FiniteGroup& grp = *problem_->group();
  int count = 0;
  for (const auto& t : orbits_)
    for (int x : t.cosets)
      if (t.stabilizer.contains(grp.conjugate(g, x))) ++count;
  return count;
}

Cyclotomic lefschetz_value(const Problem& problem, int g) { return LefschetzEvaluator(problem).value(g); }

int LefschetzReport::mismatches() const {
  int n = 0;
  for (const auto& e : entries) n += e.match ? 0 : 1;
  return n;
}

LefschetzReport crosscheck_lefschetz(const Problem& problem, Mode mode) {
  const CWResult cw = compute_chevalley_weil(problem, mode);
  const CharacterTable& table = problem.table();
  const LefschetzEvaluator eval(problem);
  LefschetzReport rep;
  for (int g = 1; g < problem.group()->order(); ++g) {
    LefschetzReport::Entry e{g, cw.evaluate(table, g), eval.value(g), false};
    e.match = e.cw_value == e.fixed_point_value;
    rep.entries.push_back(std::move(e));
  }
  rep.riemann_roch = Rational(problem.bundle().degree + 1 - problem.genus());
  for (int x = 0; x < table.size(); ++x) rep.cw_dimension += cw.multiplicity[x] * table.degrees[x];
  rep.dimension_match = rep.riemann_roch == rep.cw_dimension;
  return rep;
}

}  // namespace equichar
