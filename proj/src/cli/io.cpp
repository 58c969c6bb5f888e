#include "equichar/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "equichar/error.hpp"

namespace equichar {

namespace {

std::string field(const std::string& where, const std::string& key) { return where + "." + key; }
std::string field(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(field(where, key) + ": missing");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(where + ": integer out of range");
  return j.get<std::int64_t>();
}

int as_small_int(const json& j, const std::string& where) {
  const std::int64_t v = as_int(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(where + ": integer out of range");
  return static_cast<int>(v);
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) throw ParseError(field(where, it.key()) + ": unknown field");
}

}  // namespace

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(as_int(j, where));
  if (!j.is_string()) throw ParseError(where + ": expected a rational string like \"-3/2\", got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json rational_to_json(const Rational& q) { return q.str(); }

Cyclotomic parse_cyclotomic(const json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(parse_rational(j, where));
  const int n = as_small_int(require(j, "order", where), field(where, "order"));
  if (n < 1) throw ParseError(field(where, "order") + ": must be >= 1");
  const json& coeffs = require(j, "coeffs", where);
  if (!coeffs.is_object()) throw ParseError(field(where, "coeffs") + ": expected an object");
  std::vector<Rational> powers(n);
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    const std::string at = field(field(where, "coeffs"), it.key());
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it.key().size() || e < 0 || e >= n) throw ParseError(at + ": exponent must be an integer in [0, order)");
    powers[e] += parse_rational(it.value(), at);
  }
  return Cyclotomic::from_powers(n, powers);
}

json cyclotomic_to_json(const Cyclotomic& z) {
  const Cyclotomic m = z.minimal();
  json coeffs = json::object();
  for (std::size_t i = 0; i < m.coeffs().size(); ++i)
    if (!m.coeffs()[i].is_zero()) coeffs[std::to_string(i)] = m.coeffs()[i].str();
  return json{{"order", m.order()}, {"coeffs", coeffs}};
}

int parse_element(const FiniteGroup& group, const json& j, const std::string& where) {
  switch (group.kind()) {
    case FiniteGroup::Kind::Cyclic:
      return static_cast<int>(mod(as_int(j, where), group.order()));
    case FiniteGroup::Kind::Dihedral: {
      const int n = group.parameter();
      if (!j.is_object() || j.size() != 1 || !(j.contains("r") || j.contains("sr")))
        throw ParseError(where + ": dihedral element must be {\"r\":k} or {\"sr\":k}, got " + j.dump());
      if (j.contains("r")) return static_cast<int>(mod(as_int(j["r"], field(where, "r")), n));
      return n + static_cast<int>(mod(as_int(j["sr"], field(where, "sr")), n));
    }
    case FiniteGroup::Kind::Explicit: {
      const std::int64_t g = as_int(j, where);
      if (g < 0 || g >= group.order())
        throw ParseError(where + ": element index " + std::to_string(g) + " out of range");
      return static_cast<int>(g);
    }
  }
  throw ParseError(where + ": unknown group kind");
}

json element_to_json(const FiniteGroup& group, int g) {
  if (group.kind() == FiniteGroup::Kind::Dihedral) {
    const int n = group.parameter();
    return g < n ? json{{"r", g}} : json{{"sr", g - n}};
  }
  return g;
}

GroupPtr parse_group(const json& j, const std::string& where) {
  const json& kind = require(j, "kind", where);
  if (!kind.is_string()) throw ParseError(field(where, "kind") + ": expected a string");
  const std::string k = kind.get<std::string>();
  GroupSpec spec;
  if (k == "cyclic" || k == "dihedral") {
    reject_unknown(j, {"kind", "n"}, where);
    spec.kind = k == "cyclic" ? FiniteGroup::Kind::Cyclic : FiniteGroup::Kind::Dihedral;
    spec.n = as_small_int(require(j, "n", where), field(where, "n"));
  } else if (k == "explicit") {
    reject_unknown(j, {"kind", "order", "mul"}, where);
    spec.kind = FiniteGroup::Kind::Explicit;
    const int order = as_small_int(require(j, "order", where), field(where, "order"));
    const json& mul = as_array(require(j, "mul", where), field(where, "mul"));
    if (order < 1 || static_cast<int>(mul.size()) != order)
      throw ParseError(field(where, "mul") + ": expected " + std::to_string(order) + " rows");
    for (std::size_t r = 0; r < mul.size(); ++r) {
      const std::string at = field(field(where, "mul"), r);
      const json& row = as_array(mul[r], at);
      if (static_cast<int>(row.size()) != order)
        throw ParseError(at + ": expected " + std::to_string(order) + " entries");
      std::vector<int> vals;
      for (std::size_t c = 0; c < row.size(); ++c) vals.push_back(as_small_int(row[c], field(at, c)));
      spec.table.push_back(std::move(vals));
    }
  } else {
    throw ParseError(field(where, "kind") + ": expected \"cyclic\", \"dihedral\" or \"explicit\", got \"" + k + "\"");
  }
  try {
    return make_group(spec);
  } catch (const InvalidData& e) {
    throw InvalidData(where + ": " + e.what());
  }
}

namespace {

CharacterTable parse_table(const GroupPtr& group, const json& j) {
  const std::string where = "table";
  reject_unknown(j, {"classes", "irreducibles"}, where);
  std::vector<std::vector<int>> classes;
  const json& cls = as_array(require(j, "classes", where), field(where, "classes"));
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const std::string at = field(field(where, "classes"), c);
    std::vector<int> members;
    for (std::size_t i = 0; i < as_array(cls[c], at).size(); ++i)
      members.push_back(parse_element(*group, cls[c][i], field(at, i)));
    classes.push_back(std::move(members));
  }
  std::vector<SuppliedIrreducible> irr;
  const json& list = as_array(require(j, "irreducibles", where), field(where, "irreducibles"));
  for (std::size_t x = 0; x < list.size(); ++x) {
    const std::string at = field(field(where, "irreducibles"), x);
    reject_unknown(list[x], {"name", "degree", "values"}, at);
    SuppliedIrreducible s;
    const json& name = require(list[x], "name", at);
    if (!name.is_string()) throw ParseError(field(at, "name") + ": expected a string");
    s.name = name.get<std::string>();
    s.degree = as_small_int(require(list[x], "degree", at), field(at, "degree"));
    const json& vals = as_array(require(list[x], "values", at), field(at, "values"));
    for (std::size_t c = 0; c < vals.size(); ++c)
      s.class_values.push_back(parse_cyclotomic(vals[c], field(field(at, "values"), c)));
    irr.push_back(std::move(s));
  }
  try {
    return supplied_table(group, classes, irr);
  } catch (const InvalidData& e) {
    throw InvalidData(where + ": " + e.what());
  }
}

}  // namespace

Problem Scenario::problem() const {
  if (table) return Problem(cover, bundle, *table);
  if (cover.group->kind() == FiniteGroup::Kind::Explicit)
    throw ParseError("table: an explicit group needs a supplied character table");
  return Problem(cover, bundle);
}

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
  reject_unknown(j, {"name", "group", "table", "quotient_genus", "branch_orbits", "bundle", "residues", "mode"},
                 "scenario");
  Scenario s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name: expected a string");
    s.name = j["name"].get<std::string>();
  }
  s.cover.group = parse_group(require(j, "group", "scenario"), "group");
  const FiniteGroup& g = *s.cover.group;
  if (j.contains("table")) {
    if (g.kind() != FiniteGroup::Kind::Explicit)
      throw ParseError("table: only explicit groups take a supplied table");
    s.table = parse_table(s.cover.group, j["table"]);
  }
  s.cover.quotient_genus = as_int(require(j, "quotient_genus", "scenario"), "quotient_genus");

  const json orbits = j.contains("branch_orbits") ? as_array(j["branch_orbits"], "branch_orbits") : json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const std::string at = field("branch_orbits", i);
    reject_unknown(orbits[i], {"id", "generator", "order", "rotation_exponent"}, at);
    BranchOrbit o;
    const json& id = require(orbits[i], "id", at);
    if (!id.is_string() || id.get<std::string>().empty()) throw ParseError(field(at, "id") + ": expected a non-empty string");
    o.id = id.get<std::string>();
    o.generator = parse_element(g, require(orbits[i], "generator", at), field(at, "generator"));
    o.order = as_small_int(require(orbits[i], "order", at), field(at, "order"));
    o.rotation_exponent = orbits[i].contains("rotation_exponent")
                              ? as_small_int(orbits[i]["rotation_exponent"], field(at, "rotation_exponent"))
                              : 1;
    s.cover.orbits.push_back(std::move(o));
  }

  const json& bundle = require(j, "bundle", "scenario");
  reject_unknown(bundle, {"degree", "fiber_exponents"}, "bundle");
  const std::int64_t degree = as_int(require(bundle, "degree", "bundle"), "bundle.degree");
  std::map<std::string, std::int64_t> exps;
  if (bundle.contains("fiber_exponents")) {
    const json& fe = bundle["fiber_exponents"];
    if (!fe.is_object()) throw ParseError("bundle.fiber_exponents: expected an object");
    for (auto it = fe.begin(); it != fe.end(); ++it)
      exps[it.key()] = as_int(it.value(), "bundle.fiber_exponents." + it.key());
  }
  for (std::size_t i = 0; i < s.cover.orbits.size(); ++i)
    if (s.cover.orbits[i].order < 1) throw InvalidData(field(field("branch_orbits", i), "order") + ": must be >= 1");
  // names unknown and missing orbit ids
  s.bundle = make_bundle(s.cover, degree, exps);

  if (j.contains("residues")) {
    const json& res = j["residues"];
    if (!res.is_object()) throw ParseError("residues: expected an object");
    ResidueAssignment r;
    for (auto it = res.begin(); it != res.end(); ++it) r[it.key()] = parse_rational(it.value(), "residues." + it.key());
    s.residues = std::move(r);
  }
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw ParseError("mode: expected \"proof\" or \"literal\"");
    s.mode = parse_mode(j["mode"].get<std::string>());
  }
  return s;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Scenario load_scenario(const std::string& path) { return parse_scenario(load_json(path)); }

json scenario_to_json(const Scenario& s) {
  const FiniteGroup& g = *s.cover.group;
  json out;
  if (!s.name.empty()) out["name"] = s.name;
  json group;
  switch (g.kind()) {
    case FiniteGroup::Kind::Cyclic:
      group = {{"kind", "cyclic"}, {"n", g.parameter()}};
      break;
    case FiniteGroup::Kind::Dihedral:
      group = {{"kind", "dihedral"}, {"n", g.parameter()}};
      break;
    case FiniteGroup::Kind::Explicit: {
      json mul = json::array();
      for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.multiply(a, b));
        mul.push_back(row);
      }
      group = {{"kind", "explicit"}, {"order", g.order()}, {"mul", mul}};
      break;
    }
  }
  out["group"] = group;
  out["quotient_genus"] = s.cover.quotient_genus;
  json orbits = json::array();
  for (const auto& o : s.cover.orbits)
    orbits.push_back({{"id", o.id},
                      {"generator", element_to_json(g, o.generator)},
                      {"order", o.order},
                      {"rotation_exponent", o.rotation_exponent}});
  out["branch_orbits"] = orbits;
  json fe = json::object();
  for (const auto& [id, m] : s.bundle.fiber_exponents) fe[id] = m;
  out["bundle"] = {{"degree", s.bundle.degree}, {"fiber_exponents", fe}};
  if (s.residues) {
    json r = json::object();
    for (const auto& [id, v] : *s.residues) r[id] = v.str();
    out["residues"] = r;
  }
  out["mode"] = to_string(s.mode);
  return out;
}

OracleSpec parse_oracle_spec(const json& j) {
  if (!j.is_object()) throw ParseError("oracle spec: expected a JSON object");
  reject_unknown(j, {"name", "n", "branch", "t"}, "oracle spec");
  const int n = as_small_int(require(j, "n", "oracle spec"), "n");
  std::vector<SuperellipticCurve::Branch> br;
  const json& list = as_array(require(j, "branch", "oracle spec"), "branch");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = field("branch", i);
    reject_unknown(list[i], {"x", "d"}, at);
    br.push_back({as_int(require(list[i], "x", at), field(at, "x")),
                  as_small_int(require(list[i], "d", at), field(at, "d"))});
  }
  const int t = j.contains("t") ? as_small_int(j["t"], "t") : 1;
  return OracleSpec{SuperellipticCurve(n, std::move(br)), t};
}

OracleSpec load_oracle_spec(const std::string& path) { return parse_oracle_spec(load_json(path)); }

}  // namespace equichar
