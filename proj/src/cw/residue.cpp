#include <stdexcept>

#include "equichar/cw.hpp"
#include "equichar/error.hpp"

namespace equichar {

void check_residue_constraint(const Problem& problem, const ResidueAssignment& residues) {
  const CoverData& cover = problem.cover();
  for (const auto& [id, r] : residues)
    if (cover.orbit_index(id) < 0) throw InvalidData("residue given for unknown orbit \"" + id + "\"");
  Rational sum;
  for (int q = 0; q < problem.orbit_count(); ++q) {
    auto it = residues.find(cover.orbits[q].id);
    if (it == residues.end()) throw InvalidData("no residue for orbit \"" + cover.orbits[q].id + "\"");
    sum += it->second * cover.orbit_size(q);
  }
  const Rational target = -Rational(problem.bundle().degree);
  if (sum != target)
    throw InvalidData("residues give sum r_q N/N_p = " + sum.str() + ", but -deg L = " + target.str());
}

ResidueAssignment uniform_residues(const Problem& problem) {
  const std::int64_t d = problem.bundle().degree;
  const int orbits = problem.orbit_count();
  if (orbits == 0) {
    if (d != 0)
      throw InvalidData("no branch orbits carry residues, so the residue route needs deg L = 0 (got " +
                        std::to_string(d) + ")");
    return {};
  }
  ResidueAssignment out;
  const std::int64_t n = problem.group()->order();
  for (const auto& o : problem.cover().orbits)
    out[o.id] = Rational(-d * o.order, n * orbits);
  return out;
}

ResidueLedger::ResidueLedger(const Problem& problem) : problem_(&problem) {
  const ClassFunction reg = regular_character(problem.group());
  for (int q = 0; q < problem.orbit_count(); ++q) {
    const LocalCharacterData& loc = problem.local(q);
    const int n = loc.order();
    ClassFunction sum = ClassFunction::zero(problem.group());
    ClassFunction weighted = ClassFunction::zero(problem.group());
    for (int i = 0; i < n; ++i) {
      const ClassFunction ind = induce(loc.twisted(i), loc.stabilizer());
      sum = sum + ind;
      if (i > 0) weighted = weighted + ind.scaled(Cyclotomic(Rational(i, n)));
    }
    // The fibre of pi_* L at a branch point is C[G_p] induced up to C[G].
    if (!(sum == reg)) throw std::logic_error("sum of induced fibre characters is not chi_reg");
    std::vector<Rational> ip;
    for (const auto& xi : problem.table().irreducibles) ip.push_back(inner_product(weighted, xi).rational_value());
    induced_sum_.push_back(std::move(sum));
    weighted_.push_back(std::move(weighted));
    weighted_ip_.push_back(std::move(ip));
  }
}

ClassFunction ResidueLedger::rho_prime(int orbit, const Rational& r) const {
  return induced_sum_[orbit].scaled(Cyclotomic(r / problem_->local(orbit).order()));
}

ClassFunction ResidueLedger::rho(int orbit, const Rational& r) const {
  return rho_prime(orbit, r) + weighted_[orbit];
}

std::vector<Rational> ResidueLedger::isotypic_degrees(const ResidueAssignment& residues) const {
  check_residue_constraint(*problem_, residues);
  const CharacterTable& table = problem_->table();
  std::vector<Rational> deg(table.size());
  for (int q = 0; q < problem_->orbit_count(); ++q) {
    const Rational scale = residues.at(problem_->cover().orbits[q].id) / problem_->local(q).order();
    for (int x = 0; x < table.size(); ++x) deg[x] -= scale * table.degrees[x] + weighted_ip_[q][x];
  }
  return deg;
}

ResidueTrace ResidueLedger::trace_total(const ResidueAssignment& residues) const {
  const std::vector<Rational> deg = isotypic_degrees(residues);
  const CoverData& cover = problem_->cover();
  ResidueTrace out;
  Rational from_rho;
  for (int q = 0; q < problem_->orbit_count(); ++q) {
    const Rational& r = residues.at(cover.orbits[q].id);
    const int n = cover.orbits[q].order;
    // each of the N/N_p points contributes r + (N_p - 1)/2
    out.trace_total += (r + Rational(n - 1, 2)) * cover.orbit_size(q);
    from_rho += rho(q, r).degree().rational_value();
  }
  out.degree = -out.trace_total;
  out.rho_trace_holds = from_rho == out.trace_total;
  out.ramification_holds =
      out.degree == Rational(problem_->bundle().degree) - Rational(problem_->ramification(), 2);
  Rational isotypic;
  for (int x = 0; x < problem_->table().size(); ++x) isotypic += deg[x] * problem_->table().degrees[x];
  out.isotypic_sum_holds = isotypic == out.degree;
  return out;
}

ClassFunction rho(const Problem& problem, int orbit, const Rational& r) {
  return ResidueLedger(problem).rho(orbit, r);
}

std::vector<Rational> gm_isotypic_degree(const Problem& problem, const ResidueAssignment& residues) {
  return ResidueLedger(problem).isotypic_degrees(residues);
}

ResidueTrace gm_residue_trace_total(const Problem& problem, const ResidueAssignment& residues) {
  return ResidueLedger(problem).trace_total(residues);
}

}  // namespace equichar
