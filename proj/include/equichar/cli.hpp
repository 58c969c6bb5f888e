#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "equichar/io.hpp"

namespace equichar {

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitParse = 2, kExitInvalid = 3 };

enum class Format { Text, Json };

// Canonical analyze output: keys sorted, irreducibles in table order.
json cw_report_json(const Problem& problem, const CWResult& result);
std::string cw_report_text(const Problem& problem, const CWResult& result);

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

// integrality, dimension-sum, degree-sum, residue route (uniform residues
// and, when supplied, the scenario's own), closed forms where they apply,
// regular-multiple for free actions, and the Lefschetz crosscheck.
std::vector<CheckItem> run_checks(const Scenario& scenario, const Problem& problem, Mode mode);

json character_table_json(const CharacterTable& table);
std::string character_table_text(const CharacterTable& table);
// "cyclic:6" or "dihedral:5"; ParseError otherwise.
GroupPtr parse_group_option(const std::string& text);

// Entry point behind tools/equichar; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equichar
