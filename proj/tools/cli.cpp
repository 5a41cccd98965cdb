#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "svdt/graph.hpp"
#include "svdt/sqrt_ops.hpp"
#include "svdt/sv_ops.hpp"
#include "svdt/symfunc.hpp"

namespace svdt::cli {

namespace {

using nlohmann::ordered_json;

struct Report {
  ordered_json j = ordered_json::object();
  bool as_json = false;
  bool timing = false;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void finish(std::ostream& out, const std::string& text) {
    if (as_json) {
      if (timing)
        j["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
      out << j.dump() << "\n";
    } else {
      out << text;
    }
  }
};

StrictPartition parse_shape_or_throw(const std::string& text) {
  auto p = StrictPartition::parse(text);
  if (!p)
    throw CLI::ValidationError("shape", "'" + text +
                                            "' is not a strictly decreasing positive sequence");
  return *p;
}

FamilyId parse_family_or_throw(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw CLI::ValidationError("family", "unknown family '" + name + "'");
  return *f;
}

std::vector<std::string> member_keys(FamilyId fam, const StrictPartition& shape, int n,
                                     int max_degree) {
  std::vector<std::string> keys;
  for (const auto& t : enumerate_family(fam, shape, n, max_degree))
    keys.push_back(t.serialize());
  return keys;
}

SetShiftedTableau load_tableau(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("tableau", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return SetShiftedTableau::parse(ss.str());
}

ordered_json coeff_table(const std::map<std::vector<int>, Rat>& coeffs) {
  ordered_json table = ordered_json::array();
  for (const auto& [nu, c] : coeffs) {
    ordered_json row;
    row["shape"] = nu;
    row["coeff"] = c.str();
    row["integer"] = boost::multiprecision::denominator(c) == 1;
    table.push_back(std::move(row));
  }
  return table;
}

int cmd_enumerate(Report& rep, std::ostream& out, std::ostream& err, const std::string& family,
                  const std::string& shape_text, int n, int max_degree, bool list) {
  FamilyId fam = parse_family_or_throw(family);
  StrictPartition shape = parse_shape_or_throw(shape_text);
  if (shape.length() > n) err << "note: shape has more rows than n; the family is empty\n";
  if (!family_single_valued(fam) && max_degree < 0)
    throw CLI::ValidationError("max-degree", "set-valued families need --max-degree");
  auto members = enumerate_family(fam, shape, n, max_degree);
  rep.j["outcome"]["count"] = members.size();
  std::ostringstream text;
  text << "count " << members.size() << "\n";
  if (list) {
    ordered_json items = ordered_json::array();
    for (const auto& t : members) {
      items.push_back(ordered_json::parse(t.serialize()));
      text << t.serialize() << "\n";
    }
    rep.j["outcome"]["members"] = std::move(items);
  }
  rep.finish(out, text.str());
  return 0;
}

int cmd_apply(Report& rep, std::ostream& out, const std::string& op, int i, int n_opt,
              const std::string& tableau_path) {
  SetShiftedTableau t = load_tableau(tableau_path);
  const bool star = t.multiset_mode();
  if (!is_member(t, star ? FamilyId::SetDecTabStar : FamilyId::SetDecTab))
    throw CLI::ValidationError("tableau", "input is not a (multi)set-valued decomposition tableau");
  std::optional<SetShiftedTableau> result;
  if (op == "e" || op == "f") {
    if (i < 1) throw CLI::ValidationError("i", "--i is required and positive for e/f");
    result = sv_op(t, i, op == "e" ? Dir::raise : Dir::lower);
  } else if (op == "ebar" || op == "fbar") {
    const Dir dir = op == "ebar" ? Dir::raise : Dir::lower;
    result = star ? sv_queer_star_op(t, dir) : sv_queer_op(t, dir);
  } else if (op == "e'" || op == "f'") {
    if (i < 1) throw CLI::ValidationError("i", "--i is required and positive for e'/f'");
    result = sqrt_op(t, i, op == "e'" ? Dir::raise : Dir::lower);
  } else if (op == "ebar'" || op == "fbar'") {
    const int idx = i < 1 ? 1 : i;
    const int n = std::max({n_opt, idx + 1, t.max_value()});
    result = sqrt_queer_i_op(t, idx, n, op == "ebar'" ? Dir::raise : Dir::lower);
  } else if (op == "sigma'") {
    if (i < 1) throw CLI::ValidationError("i", "--i is required and positive for sigma'");
    result = sigma_prime(t, i);
  } else {
    throw CLI::ValidationError("op", "unknown operator '" + op + "'");
  }
  rep.j["outcome"]["result"] =
      result ? ordered_json::parse(result->serialize()) : ordered_json(nullptr);
  rep.finish(out, (result ? result->serialize() : std::string("null")) + "\n");
  return 0;
}

int cmd_char(Report& rep, std::ostream& out, const std::string& family,
             const std::string& shape_text, int n, int max_degree) {
  FamilyId fam = parse_family_or_throw(family);
  StrictPartition shape = parse_shape_or_throw(shape_text);
  const int bound = family_single_valued(fam) ? shape.size() : max_degree;
  if (!family_single_valued(fam) && max_degree < 0)
    throw CLI::ValidationError("max-degree", "set-valued families need --max-degree");
  std::vector<WeightVector> wts;
  for_each_member(fam, shape, n, bound,
                  [&](const SetShiftedTableau& t) { wts.push_back(t.weight(n)); });
  TruncPoly ch = character(wts, n, std::max(bound, shape.size()));
  rep.j["outcome"]["polynomial"] = ch.text();
  rep.j["outcome"]["terms"] = ordered_json::parse(ch.to_json_string());
  rep.finish(out, ch.text() + "\n");
  return 0;
}

OperatorFamily select_family(const std::string& ops, FamilyId fam, int n, bool queer) {
  if (ops == "classical")
    return fam == FamilyId::DecTab ? dectab_family(n, queer) : sv_family(n, queer);
  if (ops == "sqrt") return sqrt_family(n, queer);
  if (ops == "squared") return squared_family(sqrt_family(n, queer));
  throw CLI::ValidationError("ops", "unknown operator set '" + ops + "'");
}

int cmd_graph(Report& rep, std::ostream& out, const std::string& family,
              const std::string& ops, bool queer, const std::string& shape_text, int n,
              int max_degree, int saturate_degree, const std::string& out_path) {
  FamilyId fam = parse_family_or_throw(family);
  StrictPartition shape = parse_shape_or_throw(shape_text);
  OperatorFamily of = select_family(ops, fam, n, queer);
  BuildOptions opts;
  if (saturate_degree >= 0) {
    opts.policy = ClosurePolicy::saturate;
    opts.max_degree = saturate_degree;
    opts.max_vertices = 2000000;
  }
  auto g = CrystalGraph::build(member_keys(fam, shape, n, max_degree), of, opts);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw CLI::ValidationError("out", "cannot write '" + out_path + "'");
    f << g.to_dot();
  }
  long edges = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (std::size_t li = 0; li < of.labels.size(); ++li)
      edges += g.lower_target(v, static_cast<int>(li)) >= 0;
  rep.j["outcome"]["vertices"] = g.vertex_count();
  rep.j["outcome"]["edges"] = edges;
  rep.j["outcome"]["components"] = g.components().size();
  rep.j["outcome"]["clipped_edges"] = g.clipped_edges();
  std::ostringstream text;
  text << "vertices " << g.vertex_count() << ", edges " << edges << ", components "
       << g.components().size() << "\n";
  if (!out_path.empty()) text << "dot written to " << out_path << "\n";
  rep.finish(out, text.str());
  return 0;
}

int cmd_verify(Report& rep, std::ostream& out, const std::string& family,
               const std::string& ops, bool queer, const std::string& axioms_text,
               const std::string& shape_text, int n, int max_degree) {
  FamilyId fam = parse_family_or_throw(family);
  StrictPartition shape = parse_shape_or_throw(shape_text);
  std::vector<Axiom> axioms;
  std::stringstream ss(axioms_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = axiom_from_name(item);
    if (!a) throw CLI::ValidationError("axioms", "unknown axiom set '" + item + "'");
    axioms.push_back(*a);
  }
  if (axioms.empty()) throw CLI::ValidationError("axioms", "no axiom sets given");
  OperatorFamily of = select_family(ops, fam, n, queer);
  auto g = CrystalGraph::build(member_keys(fam, shape, n, max_degree), of,
                               {ClosurePolicy::saturate, max_degree, 2000000});
  auto violations = g.verify_axioms(axioms);
  ordered_json vj = ordered_json::array();
  std::ostringstream text;
  for (const auto& v : violations) {
    ordered_json one;
    one["axiom"] = v.axiom;
    one["witnesses"] = v.witnesses;
    one["detail"] = v.detail;
    vj.push_back(std::move(one));
    text << v.axiom << ": " << v.detail;
    for (const auto& w : v.witnesses) text << "\n  witness " << w;
    text << "\n";
  }
  rep.j["outcome"]["violations"] = violations.size();
  rep.j["witnesses"] = std::move(vj);
  if (violations.empty()) text << "all axioms hold (" << g.vertex_count() << " vertices)\n";
  rep.finish(out, text.str());
  return violations.empty() ? 0 : 1;
}

int cmd_conjecture(Report& rep, std::ostream& out, const std::string& which,
                   const std::string& family, const std::string& shape_text, int n, int degree) {
  StrictPartition shape = parse_shape_or_throw(shape_text);
  std::ostringstream text;
  rep.j["parameters"]["scope"] = {{"shape", shape.parts()}, {"n", n}, {"degree", degree}};
  if (which == "ikeda") {
    auto res = check_ikeda(shape, n, degree);
    rep.j["outcome"]["pass"] = res.pass;
    if (res.pass) {
      text << "pass: set-valued decomposition tableaux match GP for shape "
           << shape.to_string() << ", n = " << n << ", degree <= " << degree << "\n";
      rep.finish(out, text.str());
      return 0;
    }
    rep.j["outcome"]["first_diff"] = *res.first_diff;
    rep.j["outcome"]["lhs_coeff"] = res.sigma_coeff.str();
    rep.j["outcome"]["rhs_coeff"] = res.gp_coeff.str();
    text << "FINDING: coefficients differ at a degree-" << expo_degree(*res.first_diff)
         << " monomial\n";
    rep.finish(out, text.str());
    return 1;
  }

  const std::string top_key = t_highest(shape).serialize();
  if (which == "connected") {
    const bool classical = family == "dectab";
    OperatorFamily of = classical ? dectab_family(n, true) : sqrt_family(n, true);
    FamilyId fam = classical ? FamilyId::DecTab : FamilyId::SetDecTab;
    BuildOptions opts;
    if (!classical) {
      opts.policy = ClosurePolicy::saturate;
      opts.max_degree = degree + 1;
      opts.max_vertices = 2000000;
    }
    auto seeds = member_keys(fam, shape, n, degree);
    auto g = CrystalGraph::build(seeds, of, opts);
    auto comps = g.components();
    const int top = g.index_of(top_key);
    if (top < 0) throw contract_error("conjecture connected: top tableau not in graph");
    std::vector<char> with_top(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& comp : comps)
      if (std::find(comp.begin(), comp.end(), top) != comp.end())
        for (int v : comp) with_top[static_cast<std::size_t>(v)] = 1;
    std::vector<std::string> strays;
    for (const auto& s : seeds)
      if (!with_top[static_cast<std::size_t>(g.index_of(s))]) strays.push_back(s);
    rep.j["outcome"]["pass"] = strays.empty();
    rep.j["outcome"]["components_in_closure"] = comps.size();
    rep.j["witnesses"] = strays;
    if (strays.empty()) {
      text << "pass: all " << seeds.size() << " elements of degree <= " << degree
           << " connect to the top tableau (closure to degree "
           << (classical ? degree : degree + 1) << ")\n";
      rep.finish(out, text.str());
      return 0;
    }
    text << "FINDING: " << strays.size() << " elements are not connected to the top tableau\n";
    rep.finish(out, text.str());
    return 1;
  }

  if (which == "unique-highest") {
    const bool classical = family == "dectab";
    FamilyId fam = classical ? FamilyId::DecTab : FamilyId::SetDecTab;
    std::vector<std::string> highs;
    for (const auto& t : enumerate_family(fam, shape, n, degree)) {
      const bool top = classical ? is_queer_highest(dectab_family(n, true), t.serialize())
                                 : is_sqrt_highest(t, n);
      if (top) highs.push_back(t.serialize());
    }
    const bool pass = highs.size() == 1 && highs.front() == top_key;
    rep.j["outcome"]["pass"] = pass;
    rep.j["outcome"]["highest"] = highs;
    if (pass) {
      text << "pass: unique highest weight element is the top tableau\n";
      rep.finish(out, text.str());
      return 0;
    }
    text << "FINDING: " << highs.size() << " highest weight elements of degree <= " << degree
         << "\n";
    rep.finish(out, text.str());
    return 1;
  }
  throw CLI::ValidationError("conjecture", "unknown conjecture '" + which + "'");
}

int cmd_expand(Report& rep, std::ostream& out, const std::string& input_path,
               const std::string& sigma_shape, int n, int degree) {
  TruncPoly f(n, degree);
  if (!sigma_shape.empty()) {
    f = basis_poly(BasisKind::Sigma, parse_shape_or_throw(sigma_shape), n, degree);
  } else if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw CLI::ValidationError("input", "cannot open '" + input_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    f = TruncPoly::from_json_string(ss.str());
    if (f.vars() != n || f.max_degree() > degree)
      throw CLI::ValidationError("input", "polynomial does not match --n/--degree");
  } else {
    throw CLI::ValidationError("expand", "need --input or --sigma");
  }
  GPExpansion ex = gp_expand(f);
  std::map<std::vector<int>, Rat> table;
  for (const auto& [nu, c] : ex.coeffs) table[nu.parts()] = c;
  rep.j["outcome"]["coefficients"] = coeff_table(table);
  rep.j["outcome"]["residual"] = ex.residual.text();
  std::ostringstream text;
  for (const auto& [nu, c] : table) {
    text << "GP[" << StrictPartition(nu).to_string() << "] " << c << "\n";
  }
  text << "residual " << ex.residual.text() << "\n";
  rep.finish(out, text.str());
  return 0;
}

int cmd_product(Report& rep, std::ostream& out, const std::string& kind,
                const std::string& lhs_text, const std::string& rhs_text, int n, int degree) {
  if (kind != "G" && kind != "GP") throw CLI::ValidationError("kind", "use G or GP");
  auto ex = product_expand(kind == "G" ? ProductBasis::G : ProductBasis::GP,
                           parse_shape_or_throw(lhs_text), parse_shape_or_throw(rhs_text), n,
                           degree);
  rep.j["outcome"]["coefficients"] = coeff_table(ex.coeffs);
  rep.j["outcome"]["residual"] = ex.residual.text();
  std::ostringstream text;
  for (const auto& [nu, c] : ex.coeffs) {
    text << kind << "[";
    for (std::size_t k = 0; k < nu.size(); ++k) text << (k ? "," : "") << nu[k];
    text << "] " << c << "\n";
  }
  text << "residual " << ex.residual.text() << "\n";
  rep.finish(out, text.str());
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact combinatorics of crystals on set-valued shifted tableaux"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "emit a JSON report on stdout");
  app.add_flag("--timing", timing, "include wall time in the JSON report");

  std::string family = "setdectab", shape, ops = "classical", axioms, op, tableau_path;
  std::string out_path, input_path, sigma_shape, kind = "GP", which;
  int n = 0, max_degree = -1, i = -1, degree = -1, saturate_degree = -1;
  bool queer = false, list = false;

  auto* c_enum = app.add_subcommand("enumerate", "list a tableau family");
  c_enum->add_option("--family", family)->required();
  c_enum->add_option("--shape", shape)->required();
  c_enum->add_option("--n", n)->required();
  c_enum->add_option("--max-degree", max_degree);
  c_enum->add_flag("--list", list);

  auto* c_apply = app.add_subcommand("apply", "apply a crystal operator to a tableau file");
  c_apply->add_option("--op", op)->required();
  c_apply->add_option("--i", i);
  c_apply->add_option("--n", n);
  c_apply->add_option("--tableau", tableau_path)->required();

  auto* c_char = app.add_subcommand("char", "character polynomial of a family");
  c_char->add_option("--family", family)->required();
  c_char->add_option("--shape", shape)->required();
  c_char->add_option("--n", n)->required();
  c_char->add_option("--max-degree", max_degree);

  auto* c_graph = app.add_subcommand("graph", "build a crystal graph and export DOT");
  c_graph->add_option("--family", family)->required();
  c_graph->add_option("--ops", ops)->check(CLI::IsMember({"classical", "sqrt", "squared"}));
  c_graph->add_flag("--q", queer);
  c_graph->add_option("--shape", shape)->required();
  c_graph->add_option("--n", n)->required();
  c_graph->add_option("--max-degree", max_degree);
  c_graph->add_option("--saturate-degree", saturate_degree);
  c_graph->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "check crystal axioms, reporting violations");
  c_verify->add_option("--family", family);
  c_verify->add_option("--ops", ops)->check(CLI::IsMember({"classical", "sqrt", "squared"}));
  c_verify->add_flag("--q", queer);
  c_verify->add_option("--axioms", axioms)->required();
  c_verify->add_option("--shape", shape)->required();
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--max-degree", max_degree);

  auto* c_conj = app.add_subcommand("conjecture", "run a conjecture scan with scope stamping");
  c_conj->add_option("which", which)->required()->check(CLI::IsMember({"ikeda", "connected", "unique-highest"}));
  c_conj->add_option("--family", family)->check(CLI::IsMember({"setdectab", "dectab"}));
  c_conj->add_option("--shape", shape)->required();
  c_conj->add_option("--n", n)->required();
  c_conj->add_option("--degree", degree)->required();

  auto* c_expand = app.add_subcommand("expand", "expand a symmetric polynomial over GP");
  c_expand->add_flag("--gp", "expand in the GP basis (the only basis offered)");
  c_expand->add_option("--input", input_path);
  c_expand->add_option("--sigma", sigma_shape);
  c_expand->add_option("--n", n)->required();
  c_expand->add_option("--degree", degree)->required();

  auto* c_prod = app.add_subcommand("product", "expand a product of basis polynomials");
  c_prod->add_option("--kind", kind)->check(CLI::IsMember({"G", "GP"}));
  c_prod->add_option("--lhs", shape)->required();
  c_prod->add_option("--rhs", sigma_shape)->required();
  c_prod->add_option("--n", n)->required();
  c_prod->add_option("--degree", degree)->required();

  for (auto* sc : {c_enum, c_apply, c_char, c_graph, c_verify, c_conj, c_expand, c_prod})
    sc->fallthrough();

  std::string echo = "svdt";
  for (const auto& a : args) echo += " " + a;

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Report rep;
  rep.as_json = as_json;
  rep.timing = timing;
  rep.j["command"] = echo;
  rep.j["parameters"] = ordered_json::object();
  for (const auto& [key, val] : std::vector<std::pair<std::string, std::string>>{
           {"family", family}, {"shape", shape}, {"ops", ops}})
    if (!val.empty()) rep.j["parameters"][key] = val;
  if (n > 0) rep.j["parameters"]["n"] = n;
  if (max_degree >= 0) rep.j["parameters"]["max_degree"] = max_degree;
  if (degree >= 0) rep.j["parameters"]["degree"] = degree;

  try {
    if (*c_enum) return cmd_enumerate(rep, out, err, family, shape, n, max_degree, list);
    if (*c_apply) return cmd_apply(rep, out, op, i, n, tableau_path);
    if (*c_char) return cmd_char(rep, out, family, shape, n, max_degree);
    if (*c_graph)
      return cmd_graph(rep, out, family, ops, queer, shape, n, max_degree, saturate_degree,
                       out_path);
    if (*c_verify) return cmd_verify(rep, out, family, ops, queer, axioms, shape, n, max_degree);
    if (*c_conj) return cmd_conjecture(rep, out, which, family, shape, n, degree);
    if (*c_expand) return cmd_expand(rep, out, input_path, sigma_shape, n, degree);
    if (*c_prod) return cmd_product(rep, out, kind, shape, sigma_shape, n, degree);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const contract_error& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace svdt::cli
