#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equichar/character.hpp"
#include "equichar/cover.hpp"

namespace equichar {

// How the per-orbit coefficient m_{xi,q} is evaluated.
//   Proof:   (1/N_p) sum_i i <xi|G_p, nu tau^i>, the value that makes the
//            Riemann-Roch dimension count and the fixed-point formula hold.
//   Literal: the same multiplied by xi(1). Kept only as a diagnostic; it
//            breaks those identities for every group with a degree > 1
//            irreducible.
enum class Mode { Proof, Literal };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);  // throws ParseError

// Restrictions of every irreducible to one stabilizer G_p together with the
// characters nu tau^i of G_p and the integers <xi|G_p, nu tau^i>.
class LocalCharacterData {
 public:
  LocalCharacterData(const CoverData& cover, int orbit, std::int64_t fiber_exponent,
                     const CharacterTable& table);

  int orbit() const { return orbit_; }
  const CyclicSubgroup& stabilizer() const { return stabilizer_; }
  int order() const { return stabilizer_.order(); }
  std::int64_t fiber_exponent() const { return m_; }

  const ClassFunction& restriction(int xi) const { return restrictions_[xi]; }
  // nu tau^i as a character of G_p.
  const ClassFunction& twisted(int i) const { return twisted_[i]; }
  // <xi|G_p, nu tau^i>_{G_p}
  int multiplicity(int xi, int i) const { return mult_[xi][i]; }

 private:
  int orbit_;
  std::int64_t m_;
  CyclicSubgroup stabilizer_;
  std::vector<ClassFunction> restrictions_;
  std::vector<ClassFunction> twisted_;
  std::vector<std::vector<int>> mult_;
};

// A validated cover + bundle + character table, with the per-orbit local
// data precomputed. Immutable once built.
class Problem {
 public:
  // Validates the cover (InvalidData) and bundle (ParseError on missing or
  // unknown orbit ids).
  Problem(CoverData cover, BundleData bundle, CharacterTable table);
  // Uses the built-in table of a cyclic or dihedral group.
  Problem(CoverData cover, BundleData bundle);

  const CoverData& cover() const { return cover_; }
  const BundleData& bundle() const { return bundle_; }
  const CharacterTable& table() const { return table_; }
  const GroupPtr& group() const { return cover_.group; }
  std::int64_t genus() const { return genus_; }
  std::int64_t ramification() const { return ramification_; }
  const LocalCharacterData& local(int orbit) const { return locals_[orbit]; }
  int orbit_count() const { return static_cast<int>(locals_.size()); }

 private:
  CoverData cover_;
  BundleData bundle_;
  CharacterTable table_;
  std::int64_t genus_;
  std::int64_t ramification_;
  std::vector<LocalCharacterData> locals_;
};

// Per-orbit coefficient of xi (already summed over the points of the orbit).
Rational local_coefficient(const Problem& problem, int orbit, int xi, Mode mode = Mode::Proof);
// m_xi(L): the sum of local_coefficient over all branch orbits.
Rational m_total(const Problem& problem, int xi, Mode mode = Mode::Proof);

struct CWResult {
  Mode mode = Mode::Proof;
  std::int64_t genus = 0;
  std::vector<Rational> m;             // m_xi(L)
  std::vector<Rational> multiplicity;  // <chi_G(L), xi>
  std::vector<Rational> degree;        // deg V_xi
  bool integral = false;
  std::optional<VirtualCharacter> chi;            // set when integral
  std::optional<std::vector<std::int64_t>> degV;  // set when integral

  // sum_xi multiplicity(xi) xi(g), exact even when not integral.
  Cyclotomic evaluate(const CharacterTable& table, int g) const;
};

// Computes everything without rejecting non-integral output.
CWResult compute_chevalley_weil(const Problem& problem, Mode mode = Mode::Proof);
// As above, but throws InconsistentData naming the first irreducible with a
// fractional multiplicity or isotypic degree.
CWResult chevalley_weil(const Problem& problem, Mode mode = Mode::Proof);

// Residue r_q of an invariant logarithmic connection at each branch orbit.
using ResidueAssignment = std::map<std::string, Rational>;

// Throws InvalidData unless every orbit has a residue and
// sum_q r_q N/N_p = -deg L; the message carries the computed sum.
void check_residue_constraint(const Problem& problem, const ResidueAssignment& residues);
// r_q = -d N_p / (N * #orbits). Throws InvalidData for a free action with
// d != 0, where no assignment exists.
ResidueAssignment uniform_residues(const Problem& problem);

struct ResidueTrace {
  Rational trace_total;  // sum_q tr Res_q of the Gauss-Manin connection
  Rational degree;       // deg pi_* L = -trace_total
  bool rho_trace_holds;  // trace_total == sum_q rho_q(1)
  bool ramification_holds;  // degree == deg L - deg R / 2
  bool isotypic_sum_holds;  // degree == sum_xi xi(1) deg V_xi
};

// Gauss-Manin bookkeeping: the class functions rho_q and the isotypic
// degrees they produce through induction (the route dual to the
// restrictions used by the Chevalley-Weil coefficients).
class ResidueLedger {
 public:
  explicit ResidueLedger(const Problem& problem);

  // rho_q = sum_i ((r + i)/N_p) Ind(nu tau^i)
  ClassFunction rho(int orbit, const Rational& r) const;
  // rho_q' = (r/N_p) chi_reg and rho_q'' = sum_i (i/N_p) Ind(nu tau^i)
  ClassFunction rho_prime(int orbit, const Rational& r) const;
  const ClassFunction& rho_double_prime(int orbit) const { return weighted_[orbit]; }

  // deg V_xi = -sum_q <rho_q, xi>
  std::vector<Rational> isotypic_degrees(const ResidueAssignment& residues) const;
  ResidueTrace trace_total(const ResidueAssignment& residues) const;

 private:
  const Problem* problem_;
  std::vector<ClassFunction> induced_sum_;  // sum_i Ind(nu tau^i), must be chi_reg
  std::vector<ClassFunction> weighted_;     // sum_i (i/N_p) Ind(nu tau^i)
  // rho_q is linear in r: <rho_q, xi> = (r/N_p) xi(1) + <rho_q'', xi>
  std::vector<std::vector<Rational>> weighted_ip_;
};

ClassFunction rho(const Problem& problem, int orbit, const Rational& r);
std::vector<Rational> gm_isotypic_degree(const Problem& problem, const ResidueAssignment& residues);
ResidueTrace gm_residue_trace_total(const Problem& problem, const ResidueAssignment& residues);

// alpha with xi^1|G_p = tau_p^alpha, xi^1 the generating character of a
// cyclic group. Throws UnsupportedCase for non-cyclic groups.
std::int64_t cyclic_alignment(const Problem& problem, int orbit);
// Per-orbit value (alpha k - m mod N_p) / N_p of the coefficient of xi^k.
Rational cyclic_closed_form(const Problem& problem, int orbit, std::int64_t k, std::int64_t alignment);

// Per-orbit closed forms for dihedral groups when G_p lies in the rotation
// subgroup R. Throws UnsupportedCase for reflection stabilizers.
Rational dihedral_closed_form(const Problem& problem, int orbit, int target);

// Holomorphic fixed-point sum over X^g of nu_p(g) / (1 - tau_p(g)), with the
// per-orbit local terms and cosets precomputed.
class LefschetzEvaluator {
 public:
  explicit LefschetzEvaluator(const Problem& problem);
  // Throws InvalidData for the identity.
  Cyclotomic value(int g) const;
  int fixed_point_count(int g) const;

 private:
  struct OrbitTerms {
    CyclicSubgroup stabilizer;
    std::vector<int> cosets;
    std::vector<Cyclotomic> term;  // term[k] = nu(c^k) / (1 - tau(c^k)), k >= 1
  };
  const Problem* problem_;
  std::vector<OrbitTerms> orbits_;
};

Cyclotomic lefschetz_value(const Problem& problem, int g);

struct LefschetzReport {
  struct Entry {
    int element;
    Cyclotomic cw_value;
    Cyclotomic fixed_point_value;
    bool match;
  };
  std::vector<Entry> entries;  // every g != 1
  Rational riemann_roch;       // deg L + 1 - g_X
  Rational cw_dimension;       // sum_xi xi(1) multiplicity(xi)
  bool dimension_match = false;

  int mismatches() const;
  bool ok() const { return dimension_match && mismatches() == 0; }
};

LefschetzReport crosscheck_lefschetz(const Problem& problem, Mode mode = Mode::Proof);

// True when chi is c * chi_reg for an integer c; stores c.
bool is_regular_multiple(const CWResult& result, const CharacterTable& table, std::int64_t* scalar = nullptr);

}  // namespace equichar
