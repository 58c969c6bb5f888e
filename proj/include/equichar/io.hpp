#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "equichar/character.hpp"
#include "equichar/cover.hpp"
#include "equichar/cw.hpp"
#include "equichar/oracle.hpp"

namespace equichar {

using json = nlohmann::json;

// {"order": n, "coeffs": {"<exponent>": "p/q"}}, exponents in [0, n).
Cyclotomic parse_cyclotomic(const json& j, const std::string& where = "cyclotomic");
json cyclotomic_to_json(const Cyclotomic& z);  // minimal order, sparse, sorted

Rational parse_rational(const json& j, const std::string& where);
json rational_to_json(const Rational& q);  // always a string

// Element literals: cyclic -> j (g^j), dihedral -> {"r":k} or {"sr":k},
// explicit -> table index. Exponents are reduced; everything else is a
// ParseError naming the field.
int parse_element(const FiniteGroup& group, const json& j, const std::string& where);
json element_to_json(const FiniteGroup& group, int g);

GroupPtr parse_group(const json& j, const std::string& where = "group");

struct Scenario {
  std::string name;  // optional "name" field
  CoverData cover;
  BundleData bundle;
  std::optional<CharacterTable> table;  // explicit groups only
  std::optional<ResidueAssignment> residues;
  Mode mode = Mode::Proof;

  Problem problem() const;  // validates: InvalidData / ParseError
};

// ParseError for malformed or missing fields, InvalidData for data that
// parses but cannot describe a group (bad multiplication table or
// character table). Cover validation happens in Scenario::problem().
Scenario parse_scenario(const json& j);
Scenario load_scenario(const std::string& path);
json scenario_to_json(const Scenario& s);

// {"n": 3, "branch": [{"x": 0, "d": 1}, ...], "t": 1}
struct OracleSpec {
  SuperellipticCurve curve;
  int t = 1;
};
OracleSpec parse_oracle_spec(const json& j);
OracleSpec load_oracle_spec(const std::string& path);

// Reads a whole file and parses it as JSON; ParseError carries the path
// and, for syntax errors, the parser's line/column message.
json load_json(const std::string& path);

}  // namespace equichar
