#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "equichar/cli.hpp"
#include "equichar/error.hpp"

namespace equichar {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

CheckItem residue_check(const std::string& name, const Problem& problem, const ResidueAssignment& res,
                        const CWResult& r) {
  std::vector<Rational> deg;
  try {
    deg = gm_isotypic_degree(problem, res);
  } catch (const InvalidData& e) {
    return {name, false, e.what()};
  }
  std::vector<std::string> bad;
  for (std::size_t x = 0; x < deg.size(); ++x)
    if (deg[x] != r.degree[x])
      bad.push_back(problem.table().names[x] + ": residue route " + deg[x].str() + ", CW " + r.degree[x].str());
  return {name, bad.empty(), bad.empty() ? "deg V agrees on every irreducible" : join(bad, "; ")};
}

std::vector<std::string> closed_form_mismatches(const Problem& problem, bool* applicable) {
  std::vector<std::string> bad;
  *applicable = false;
  const FiniteGroup& g = *problem.group();
  for (int q = 0; q < problem.orbit_count(); ++q) {
    const std::string& id = problem.cover().orbits[q].id;
    if (g.kind() == FiniteGroup::Kind::Cyclic) {
      *applicable = true;
      const std::int64_t alpha = cyclic_alignment(problem, q);
      for (int k = 0; k < g.order(); ++k) {
        const Rational cf = cyclic_closed_form(problem, q, k, alpha);
        const Rational lc = local_coefficient(problem, q, k);
        if (cf != lc) bad.push_back(id + "/" + problem.table().names[k] + ": " + cf.str() + " vs " + lc.str());
      }
    } else if (g.kind() == FiniteGroup::Kind::Dihedral && problem.cover().orbits[q].generator < g.parameter()) {
      *applicable = true;
      for (int x = 0; x < problem.table().size(); ++x) {
        const Rational cf = dihedral_closed_form(problem, q, x);
        const Rational lc = local_coefficient(problem, q, x);
        if (cf != lc) bad.push_back(id + "/" + problem.table().names[x] + ": " + cf.str() + " vs " + lc.str());
      }
    }
  }
  return bad;
}

}  // namespace

std::vector<CheckItem> run_checks(const Scenario& scenario, const Problem& problem, Mode mode) {
  const CWResult r = compute_chevalley_weil(problem, mode);
  const CharacterTable& table = problem.table();
  std::vector<CheckItem> out;

  {
    std::vector<std::string> bad;
    for (int x = 0; x < table.size(); ++x) {
      if (!r.multiplicity[x].is_integer()) bad.push_back("multiplicity of " + table.names[x] + " = " + r.multiplicity[x].str());
      if (!r.degree[x].is_integer()) bad.push_back("deg V of " + table.names[x] + " = " + r.degree[x].str());
    }
    out.push_back({"integrality", bad.empty(), bad.empty() ? "all multiplicities and degrees integral" : join(bad, "; ")});
  }

  Rational dim, deg;
  for (int x = 0; x < table.size(); ++x) {
    dim += r.multiplicity[x] * table.degrees[x];
    deg += r.degree[x] * table.degrees[x];
  }
  const Rational rr(problem.bundle().degree + 1 - problem.genus());
  out.push_back({"dimension-sum", dim == rr,
                 "sum xi(1) multiplicity = " + dim.str() + ", deg L + 1 - g = " + rr.str()});
  const Rational dr = Rational(problem.bundle().degree) - Rational(problem.ramification(), 2);
  out.push_back({"degree-sum", deg == dr, "sum xi(1) deg V = " + deg.str() + ", deg L - deg R/2 = " + dr.str()});

  ResidueAssignment uniform;
  bool have_uniform = true;
  try {
    uniform = uniform_residues(problem);
  } catch (const InvalidData& e) {
    have_uniform = false;
    out.push_back({"residue-route", true, std::string("skipped: ") + e.what()});
  }
  if (have_uniform) out.push_back(residue_check("residue-route", problem, uniform, r));
  if (scenario.residues) out.push_back(residue_check("residue-supplied", problem, *scenario.residues, r));

  bool applicable = false;
  const auto cf = closed_form_mismatches(problem, &applicable);
  if (applicable)
    out.push_back({"closed-form", cf.empty(), cf.empty() ? "closed forms agree with the local coefficients" : join(cf, "; ")});

  if (problem.orbit_count() == 0) {
    std::int64_t c = 0;
    const bool ok = is_regular_multiple(r, table, &c);
    out.push_back({"regular-multiple", ok, ok ? "chi = " + std::to_string(c) + " chi_reg" : "free action but chi is not a multiple of chi_reg"});
  }

  const LefschetzReport lef = crosscheck_lefschetz(problem, mode);
  std::vector<std::string> bad;
  for (const auto& e : lef.entries)
    if (!e.match)
      bad.push_back(problem.group()->element_name(e.element) + ": CW " + e.cw_value.str() + ", fixed points " +
                    e.fixed_point_value.str());
  out.push_back({"lefschetz", bad.empty(),
                 bad.empty() ? "all " + std::to_string(lef.entries.size()) + " nontrivial elements agree" : join(bad, "; ")});
  return out;
}

namespace {

struct Options {
  std::string path;
  std::string format = "text";
  std::string mode;
  std::string element;
  int t = 0;
  std::string group;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Text; }

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const Scenario s = load_scenario(o.path);
  const Mode mode = o.mode.empty() ? s.mode : parse_mode(o.mode);
  const Problem problem = s.problem();
  const CWResult r = compute_chevalley_weil(problem, mode);
  if (format_of(o) == Format::Json)
    out << cw_report_json(problem, r).dump(2) << "\n";
  else
    out << cw_report_text(problem, r);
  if (!r.integral) {
    try {
      chevalley_weil(problem, mode);
    } catch (const InconsistentData& e) {
      err << "error: " << e.what() << "\n";
    }
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.path);
  const Mode mode = o.mode.empty() ? s.mode : parse_mode(o.mode);
  const Problem problem = s.problem();
  const auto checks = run_checks(s, problem, mode);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.passed; });
  if (format_of(o) == Format::Json) {
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"checks", list}, {"mode", to_string(mode)}, {"ok", ok}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    out << (ok ? "all checks passed" : "some checks failed") << " (mode " << to_string(mode) << ")\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_lefschetz(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.path);
  const Mode mode = o.mode.empty() ? s.mode : parse_mode(o.mode);
  const Problem problem = s.problem();
  const FiniteGroup& g = *problem.group();
  json literal;
  try {
    literal = json::parse(o.element);
  } catch (const json::parse_error&) {
    throw ParseError("--element: \"" + o.element + "\" is not a JSON element literal");
  }
  const int e = parse_element(g, literal, "--element");
  if (e == g.identity())
    throw InvalidData("--element: the identity has no fixed-point formula; use `equichar analyze` for the full character");
  const LefschetzEvaluator eval(problem);
  const Cyclotomic fp = eval.value(e);
  const Cyclotomic cw = compute_chevalley_weil(problem, mode).evaluate(problem.table(), e);
  const bool match = fp == cw;
  if (format_of(o) == Format::Json) {
    out << json{{"element", g.element_name(e)},
                {"fixed_point", cyclotomic_to_json(fp)},
                {"cw", cyclotomic_to_json(cw)},
                {"fixed_points", eval.fixed_point_count(e)},
                {"match", match},
                {"mode", to_string(mode)}}
               .dump(2)
        << "\n";
  } else {
    out << "element " << g.element_name(e) << " (" << eval.fixed_point_count(e) << " fixed points)\n";
    out << "fixed-point sum   " << fp.str() << "\n";
    out << "CW evaluation     " << cw.str() << "\n";
    out << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitMismatch;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  OracleSpec spec = load_oracle_spec(o.path);
  if (o.t != 0) spec.t = o.t;
  const OracleComparison c = compare_with_cw(spec.curve, spec.t);
  const CharacterTable table = irreducible_table(FiniteGroup::cyclic(spec.curve.n()));
  if (format_of(o) == Format::Json) {
    json cw = json::array();
    for (const auto& v : c.cw) cw.push_back(v.str());
    out << json{{"curve", spec.curve.describe()},
                {"t", c.t},
                {"genus", c.genus},
                {"irreducibles", table.names},
                {"sections", c.sections},
                {"expected", c.expected},
                {"cw", cw},
                {"match", c.match()}}
               .dump(2)
        << "\n";
  } else {
    std::vector<std::string> sec, exp, cw;
    for (auto v : c.sections) sec.push_back(std::to_string(v));
    for (auto v : c.expected) exp.push_back(std::to_string(v));
    for (const auto& v : c.cw) cw.push_back(v.str());
    out << spec.curve.describe() << ", genus " << c.genus << ", K^" << c.t << "\n";
    out << "irreducibles      (" << join(table.names, ", ") << ")\n";
    out << "dim H^0           (" << join(sec, ", ") << ")\n";
    out << "expected (H^0-H^1) (" << join(exp, ", ") << ")\n";
    out << "CW multiplicities (" << join(cw, ", ") << ")\n";
    out << (c.match() ? "match" : "MISMATCH") << "\n";
  }
  return c.match() ? kExitOk : kExitMismatch;
}

int cmd_table(const Options& o, std::ostream& out) {
  const CharacterTable t = irreducible_table(parse_group_option(o.group));
  if (format_of(o) == Format::Json)
    out << character_table_json(t).dump(2) << "\n";
  else
    out << character_table_text(t);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"equichar: equivariant Euler characteristics of line bundles on curves"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json"};
  const std::vector<std::string> modes{"proof", "literal"};

  auto* analyze = app.add_subcommand("analyze", "Chevalley-Weil decomposition of a scenario");
  auto* check = app.add_subcommand("check", "run every consistency check on a scenario");
  auto* lefschetz = app.add_subcommand("lefschetz", "fixed-point sum against the character value at one element");
  auto* oracle = app.add_subcommand("oracle", "compare with explicit pluridifferentials on a superelliptic curve");
  auto* table = app.add_subcommand("table", "print a built-in character table");
  for (auto* sub : {analyze, check, lefschetz, oracle, table})
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember(formats));
  for (auto* sub : {analyze, check, lefschetz}) {
    sub->add_option("file", o.path, "scenario JSON")->required();
    sub->add_option("--mode", o.mode, "proof or literal (default: scenario's mode)")->check(CLI::IsMember(modes));
  }
  lefschetz->add_option("--element", o.element, "element literal, e.g. 3 or {\"r\":1}")->required();
  oracle->add_option("file", o.path, "superelliptic curve JSON")->required();
  oracle->add_option("--t", o.t, "power of the canonical bundle")->check(CLI::PositiveNumber);
  table->add_option("--group", o.group, "cyclic:N or dihedral:N")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out, err);
    if (check->parsed()) return cmd_check(o, out);
    if (lefschetz->parsed()) return cmd_lefschetz(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    return cmd_table(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InconsistentData& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "invalid data: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace equichar
