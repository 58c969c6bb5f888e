#include <iomanip>
#include <sstream>

#include "equichar/cli.hpp"
#include "equichar/error.hpp"

namespace equichar {

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string render_character(const std::vector<Rational>& coeffs, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t x = 0; x < coeffs.size(); ++x) {
    if (coeffs[x].is_zero()) continue;
    Rational c = coeffs[x];
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    if (c != Rational(1)) os << c << "*";
    os << names[x];
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

json cw_report_json(const Problem& problem, const CWResult& r) {
  const CharacterTable& table = problem.table();
  json out;
  json m = json::array(), mult = json::array();
  for (std::size_t x = 0; x < r.m.size(); ++x) {
    m.push_back(r.m[x].str());
    mult.push_back(r.multiplicity[x].str());
  }
  out["m"] = m;
  out["multiplicity"] = mult;
  out["irreducibles"] = table.names;
  out["genus"] = r.genus;
  out["mode"] = to_string(r.mode);
  out["integral"] = r.integral;
  out["chi"] = r.chi ? json(r.chi->coeffs) : json(nullptr);
  if (r.degV) {
    out["degV"] = *r.degV;
  } else {
    json d = json::array();
    for (const auto& v : r.degree) d.push_back(v.str());
    out["degV"] = d;
  }
  return out;
}

std::string cw_report_text(const Problem& problem, const CWResult& r) {
  const CharacterTable& table = problem.table();
  std::ostringstream os;
  os << "group " << problem.group()->describe() << ", quotient genus " << problem.cover().quotient_genus
     << ", genus " << r.genus << ", deg L " << problem.bundle().degree << ", mode " << to_string(r.mode) << "\n";
  std::size_t w = 14;
  for (const auto& n : table.names) w = std::max(w, n.size() + 2);
  os << pad("irreducible", w) << pad("multiplicity", 14) << pad("m", 10) << "deg V\n";
  for (int x = 0; x < table.size(); ++x)
    os << pad(table.names[x], w) << pad(r.multiplicity[x].str(), 14) << pad(r.m[x].str(), 10) << r.degree[x].str()
       << "\n";
  os << "chi = " << render_character(r.multiplicity, table.names) << "\n";
  if (!r.integral) os << "not integral: no line bundle has these local data\n";
  return os.str();
}

json character_table_json(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  json classes = json::array();
  for (int c = 0; c < g.classes().count(); ++c) {
    json members = json::array();
    for (int e : g.classes().classes[c]) members.push_back(g.element_name(e));
    classes.push_back(members);
  }
  json irr = json::array();
  for (int x = 0; x < t.size(); ++x) {
    json vals = json::array();
    for (const auto& v : t.irreducibles[x].values()) vals.push_back(cyclotomic_to_json(v));
    irr.push_back({{"name", t.names[x]}, {"degree", t.degrees[x]}, {"values", vals}});
  }
  return json{{"group", g.describe()}, {"classes", classes}, {"irreducibles", irr}};
}

std::string character_table_text(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int c = 0; c < g.classes().count(); ++c) {
    const int size = g.classes().size(c);
    header.push_back(g.element_name(g.classes().representative[c]) + (size > 1 ? " (" + std::to_string(size) + ")" : ""));
  }
  cells.push_back(header);
  for (int x = 0; x < t.size(); ++x) {
    std::vector<std::string> row{t.names[x]};
    for (const auto& v : t.irreducibles[x].values()) row.push_back(v.str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size() + 2);
  std::ostringstream os;
  os << g.describe() << ", " << g.classes().count() << " classes\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += pad(row[c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

GroupPtr parse_group_option(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("--group: expected cyclic:N or dihedral:N, got \"" + text + "\"");
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (num.empty() || used != num.size()) throw ParseError("--group: \"" + num + "\" is not an integer");
  GroupSpec spec;
  spec.n = n;
  if (kind == "cyclic")
    spec.kind = FiniteGroup::Kind::Cyclic;
  else if (kind == "dihedral")
    spec.kind = FiniteGroup::Kind::Dihedral;
  else
    throw ParseError("--group: unknown kind \"" + kind + "\"");
  return make_group(spec);
}

}  // namespace equichar
