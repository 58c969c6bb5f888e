#include <stdexcept>

#include "equichar/cw.hpp"
#include "equichar/error.hpp"

namespace equichar {

std::string to_string(Mode mode) { return mode == Mode::Proof ? "proof" : "literal"; }

Mode parse_mode(const std::string& text) {
  if (text == "proof") return Mode::Proof;
  if (text == "literal") return Mode::Literal;
  throw ParseError("mode must be \"proof\" or \"literal\", got \"" + text + "\"");
}

LocalCharacterData::LocalCharacterData(const CoverData& cover, int orbit, std::int64_t fiber_exponent,
                                       const CharacterTable& table)
    : orbit_(orbit), m_(fiber_exponent), stabilizer_(equichar::stabilizer(cover, orbit)) {
  const BranchOrbit& o = cover.orbits[orbit];
  const int n = stabilizer_.order();
  restrictions_.reserve(table.size());
  for (const auto& xi : table.irreducibles) restrictions_.push_back(restrict_to(xi, stabilizer_));
  twisted_.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Cyclotomic> vals;
    vals.reserve(n);
    for (int k = 0; k < n; ++k) vals.push_back(fiber_value(o, m_ + i, k));
    twisted_.emplace_back(stabilizer_.as_group(), std::move(vals));
  }
  mult_.assign(table.size(), std::vector<int>(n, 0));
  for (int x = 0; x < table.size(); ++x) {
    int total = 0;
    for (int i = 0; i < n; ++i) {
      const auto v = inner_product(restrictions_[x], twisted_[i]).integer_value();
      if (!v || *v < 0)
        throw std::logic_error("restriction of " + table.names[x] + " to a stabilizer is not a character");
      mult_[x][i] = static_cast<int>(*v);
      total += mult_[x][i];
    }
    // {nu tau^i} runs over every character of G_p exactly once.
    if (total != table.degrees[x])
      throw std::logic_error("restriction of " + table.names[x] + " has the wrong degree");
  }
}

Problem::Problem(CoverData cover, BundleData bundle, CharacterTable table)
    : cover_(std::move(cover)), table_(std::move(table)) {
  require_valid_cover(cover_);
  if (!table_.group->same_as(*cover_.group))
    throw InvalidData("character table belongs to a different group");
  bundle_ = make_bundle(cover_, bundle.degree, bundle.fiber_exponents);
  genus_ = total_genus(cover_);
  ramification_ = ramification_degree(cover_);
  locals_.reserve(cover_.orbits.size());
  for (int i = 0; i < static_cast<int>(cover_.orbits.size()); ++i)
    locals_.emplace_back(cover_, i, bundle_.fiber_exponents.at(cover_.orbits[i].id), table_);
}

Problem::Problem(CoverData cover, BundleData bundle)
    : Problem(cover, std::move(bundle), irreducible_table(cover.group)) {}

Rational local_coefficient(const Problem& problem, int orbit, int xi, Mode mode) {
  const LocalCharacterData& loc = problem.local(orbit);
  std::int64_t weighted = 0;
  for (int i = 1; i < loc.order(); ++i) weighted += static_cast<std::int64_t>(i) * loc.multiplicity(xi, i);
  Rational out(weighted, loc.order());
  if (mode == Mode::Literal) out *= problem.table().degrees[xi];
  return out;
}

Rational m_total(const Problem& problem, int xi, Mode mode) {
  Rational sum;
  for (int q = 0; q < problem.orbit_count(); ++q) sum += local_coefficient(problem, q, xi, mode);
  return sum;
}

}  // namespace equichar
