#include "equichar/cw.hpp"
#include "equichar/error.hpp"

namespace equichar {

Cyclotomic CWResult::evaluate(const CharacterTable& table, int g) const {
  Cyclotomic sum;
  for (int x = 0; x < table.size(); ++x)
    if (!multiplicity[x].is_zero()) sum += table.irreducibles[x](g) * multiplicity[x];
  return sum;
}

CWResult compute_chevalley_weil(const Problem& problem, Mode mode) {
  const CharacterTable& table = problem.table();
  const Rational per_degree(problem.bundle().degree, problem.group()->order());
  const Rational scalar = per_degree + 1 - problem.cover().quotient_genus;

  CWResult r;
  r.mode = mode;
  r.genus = problem.genus();
  r.integral = true;
  for (int x = 0; x < table.size(); ++x) {
    const Rational m = m_total(problem, x, mode);
    const Rational deg = table.degrees[x];
    r.m.push_back(m);
    r.multiplicity.push_back(scalar * deg - m);
    r.degree.push_back(per_degree * deg - m);
    r.integral = r.integral && r.multiplicity.back().is_integer() && r.degree.back().is_integer();
  }
  if (r.integral) {
    VirtualCharacter chi;
    std::vector<std::int64_t> degv;
    for (int x = 0; x < table.size(); ++x) {
      chi.coeffs.push_back(*r.multiplicity[x].to_int64());
      degv.push_back(*r.degree[x].to_int64());
    }
    r.chi = std::move(chi);
    r.degV = std::move(degv);
  }
  return r;
}

CWResult chevalley_weil(const Problem& problem, Mode mode) {
  CWResult r = compute_chevalley_weil(problem, mode);
  if (!r.integral) {
    const auto& names = problem.table().names;
    for (std::size_t x = 0; x < names.size(); ++x) {
      if (!r.multiplicity[x].is_integer())
        throw InconsistentData(names[x], "multiplicity", r.multiplicity[x].str());
      if (!r.degree[x].is_integer()) throw InconsistentData(names[x], "deg V", r.degree[x].str());
    }
  }
  return r;
}

bool is_regular_multiple(const CWResult& result, const CharacterTable& table, std::int64_t* scalar) {
  if (!result.chi) return false;
  // chi_reg = sum_xi xi(1) xi, so chi = c chi_reg iff every coefficient is c xi(1).
  if (result.chi->coeffs[0] % table.degrees[0] != 0) return false;
  const std::int64_t c = result.chi->coeffs[0] / table.degrees[0];
  for (int x = 0; x < table.size(); ++x)
    if (result.chi->coeffs[x] != c * table.degrees[x]) return false;
  if (scalar) *scalar = c;
  return true;
}

}  // namespace equichar
