#include "eccad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eccad/algebra.hpp"
#include "eccad/bounds.hpp"
#include "eccad/cad.hpp"
#include "eccad/serialize.hpp"
#include "eccad/verify.hpp"

namespace eccad {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string formula;
  std::string order;
  std::vector<std::string> ecs;
  bool heuristic = false;
  bool no_ec = false;
  bool no_prune = false;
  std::string prune = "alternate";
  bool strict_coeffs = false;
  bool star_res = false;
  bool full_lift = false;
  bool json = false;
  unsigned threads = 0;
};

void add_common(CLI::App* app, Common& c, bool designation) {
  app->add_option("formula", c.formula, "quantifier-free formula, e.g. \"x^2+y^2-1<0 /\\ y=x\"");
  app->add_option("--order", c.order, "variables smallest first, e.g. v,u,x,y,z");
  app->add_flag("--strict-coeffs", c.strict_coeffs, "project with every coefficient");
  app->add_flag("--star-res", c.star_res,
                "use resultants instead of discriminants for B\\F in P_F*");
  app->add_flag("--json", c.json, "machine-readable output");
  app->add_option("--threads", c.threads, "worker threads (default: ECCAD_THREADS or all cores)");
  if (designation) {
    app->add_option("--ec", c.ecs, "designate VAR:POLY (repeatable)");
    app->add_flag("--heuristic", c.heuristic, "designate by the degree heuristic (default)");
    app->add_flag("--no-ec", c.no_ec, "designate nothing (sign-invariant lifting)");
  }
  app->add_flag("--no-prune", c.no_prune, "lift over every cell");
  app->add_option("--prune", c.prune, "pruning policy")
      ->check(CLI::IsMember({"alternate", "every", "none"}));
  app->add_flag("--full-lift", c.full_lift, "lift with the whole basis at every level");
}

struct Problem {
  OrderPtr order;
  Formula phi;
  CandidateTable table;
};

Problem load_problem(const Common& c) {
  if (c.formula.empty()) throw UsageError("a formula is required");
  if (c.order.empty()) throw UsageError("--order is required");
  Problem p;
  try {
    p.order = parse_order(c.order);
    p.phi = parse_formula(c.formula, p.order);
  } catch (const AlgebraError& e) {
    throw UsageError(e.what());
  }
  p.table = propagate(explicit_ecs(p.phi));
  if (p.table.levels.empty()) {
    p.table.order = p.order;
    p.table.levels.resize(p.order->size());
  }
  return p;
}

BuildOptions build_options(const Common& c) {
  BuildOptions o;
  o.prune = c.no_prune          ? PrunePolicy::None
            : c.prune == "every" ? PrunePolicy::EveryLevel
            : c.prune == "none"  ? PrunePolicy::None
                                 : PrunePolicy::Alternating;
  o.full_lift = c.full_lift;
  o.projection.strict_coefficients = c.strict_coeffs;
  o.projection.star_uses_resultants = c.star_res;
  o.threads = c.threads;
  return o;
}

std::string find_provenance(const CandidateTable& t, const Polynomial& p, std::size_t k) {
  const Polynomial np = normal_form(p);
  for (const auto& c : t.levels[k])
    if (normal_form(c.poly) == np) return c.provenance;
  return "";
}

Designation choose_designation(const Common& c, const Problem& p) {
  const std::size_t n = p.order->size();
  if (c.no_ec) return Designation(n);
  if (c.ecs.empty()) return designate_heuristic(p.table);
  Designation d(n);
  for (const auto& arg : c.ecs) {
    const auto colon = arg.find(':');
    if (colon == std::string::npos) throw UsageError("--ec expects VAR:POLY, got '" + arg + "'");
    const std::string var = arg.substr(0, colon);
    const auto k = p.order->index_of(var);
    if (!k) throw UsageError("--ec: unknown variable '" + var + "'");
    if (d.ecs[*k]) throw UsageError("--ec: two constraints for " + var);
    try {
      d.ecs[*k] = parse_polynomial(arg.substr(colon + 1), p.order);
    } catch (const AlgebraError& e) {
      throw UsageError(std::string("--ec: ") + e.what());
    }
    d.provenance[*k] = find_provenance(p.table, *d.ecs[*k], *k);
  }
  try {
    validate_designation(d, p.table);
  } catch (const AlgebraError& e) {
    throw UsageError(e.what());
  }
  return d;
}

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + "}";
}

std::string index_string(const std::vector<std::uint32_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

// Stacks over the cells of level k - 1: how many were lifted and how many
// were extended trivially.
std::pair<std::size_t, std::size_t> stack_kinds(const CAD& cad, std::size_t k) {
  std::size_t lifted = 0, trivial = 0;
  for (const Cell* c : cad.cells_at_level(k)) (c->lift == kTrivialLift ? trivial : lifted)++;
  return {lifted, trivial};
}

void print_table(const CandidateTable& t, std::ostream& out) {
  const auto& order = *t.order;
  for (std::size_t k = t.levels.size(); k-- > 0;) {
    out << order.name(k) << ": " << t.levels[k].size() << " candidate(s)\n";
    for (const auto& c : t.levels[k])
      out << "  " << c.poly.to_string() << "    [" << c.provenance
          << (c.primitive ? "" : ", not primitive") << "]\n";
  }
  for (const auto& w : t.warnings) out << "warning: " << w << "\n";
}

json table_json(const CandidateTable& t) {
  json levels = json::array();
  for (std::size_t k = t.levels.size(); k-- > 0;) {
    json cs = json::array();
    for (const auto& c : t.levels[k])
      cs.push_back({{"polynomial", c.poly.to_string()},
                    {"provenance", c.provenance},
                    {"primitive", c.primitive}});
    levels.push_back({{"variable", t.order->name(k)}, {"candidates", cs}});
  }
  return {{"levels", levels}, {"warnings", t.warnings}};
}

json designation_json(const Designation& d, const VariableOrder& order) {
  json a = json::array();
  for (std::size_t k = d.size(); k-- > 0;)
    a.push_back({{"variable", order.name(k)},
                 {"ec", d.ecs[k] ? json(d.ecs[k]->to_string()) : json(nullptr)},
                 {"provenance", d.provenance[k]}});
  return a;
}

void print_cells(const Cell& c, const VariableOrder& order, std::ostream& out) {
  if (c.level() > 0) {
    out << std::string(2 * c.level(), ' ') << index_string(c.index) << " "
        << (c.is_section() ? "section" : "sector") << " " << order.name(c.level() - 1)
        << " = " << (c.sample.back().is_rational() ? c.sample.back().rational().get_str()
                                                   : c.sample.back().to_string());
    if (c.lift == kTrivialLift) out << "  [trivial extension]";
    if (c.trivial) out << "  [trivial]";
    if (c.truth != Truth::Unset) out << "  " << (c.truth == Truth::True ? "true" : "false");
    out << "\n";
  }
  for (const auto& ch : c.children) print_cells(ch, order, out);
}

void print_build(const CAD& cad, const BuildOptions& o, bool cells, std::ostream& out) {
  const auto& order = *cad.order;
  const std::size_t n = order.size();
  out << "order: ";
  for (std::size_t k = 0; k < n; ++k) out << (k ? " < " : "") << order.name(k);
  out << "\ndesignation: " << cad.designation.to_string(order) << "\n";
  out << "projection:\n";
  for (std::size_t k = n; k-- > 0;) {
    const auto& L = cad.layers.levels[k];
    out << "  " << order.name(k) << ": operator " << operator_name(L.op) << "\n"
        << "    A = " << join_polys(L.A) << "\n"
        << "    B = " << join_polys(L.B) << "\n";
    if (!L.F.empty()) out << "    F = " << join_polys(L.F) << "\n";
  }
  out << "pruning: " << prune_policy_name(o.prune) << (o.full_lift ? ", full lift" : "")
      << "; pruned levels:";
  bool any = false;
  for (std::size_t k = 0; k < n; ++k)
    if (cad.pruned_levels[k]) {
      out << " " << order.name(k);
      any = true;
    }
  out << (any ? "" : " none") << "\n";
  out << "lifting:\n";
  for (std::size_t k = 0; k < cad.level_counts.size(); ++k) {
    out << "  " << order.name(k) << ": " << cad.level_counts[k] << " cells";
    if (k > 0) {
      auto [lifted, trivial] = stack_kinds(cad, k);
      out << " (" << lifted << " stacks lifted, " << trivial << " extended trivially)";
    }
    out << "\n";
  }
  if (cad.status == Status::Fail) {
    out << "FAIL: " << cad.failure->to_string(order) << "\n";
    return;
  }
  out << "level counts:";
  for (auto c : cad.level_counts) out << " " << c;
  out << "\ncells: " << cad.leaf_count() << " (true: " << cad.true_leaf_count() << ")\n";
  if (cells) {
    out << "cell tree:\n";
    print_cells(cad.root, order, out);
  }
}

std::string counts_string(const CAD& cad) {
  std::string s;
  for (std::size_t i = 0; i < cad.level_counts.size(); ++i)
    s += (i ? "," : "") + std::to_string(cad.level_counts[i]);
  return s;
}

int cmd_build(const Common& c, bool cells, const std::string& output, std::ostream& out) {
  const Problem p = load_problem(c);
  const Designation d = choose_designation(c, p);
  const BuildOptions o = build_options(c);
  const CAD cad = build_cad(p.phi, p.order, d, o);
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw UsageError("cannot write " + output);
    f << save_cad(cad, c.formula) << "\n";
  }
  if (c.json)
    out << cad_to_json(cad, c.formula).dump(1) << "\n";
  else
    print_build(cad, o, cells, out);
  return cad.status == Status::Fail ? kExitFail : kExitOk;
}

int cmd_propagate(const Common& c, std::ostream& out) {
  const Problem p = load_problem(c);
  if (c.json) {
    out << table_json(p.table).dump(1) << "\n";
    return kExitOk;
  }
  print_table(p.table, out);
  const Designation h = designate_heuristic(p.table);
  out << "heuristic designation: " << h.to_string(*p.order) << "\n";
  return kExitOk;
}

int cmd_designations(const Common& c, std::ostream& out) {
  const Problem p = load_problem(c);
  const BuildOptions o = build_options(c);
  auto ds = enumerate_designations(p.table);
  if (ds.empty() || ds.front().size() != p.order->size()) ds = {Designation(p.order->size())};
  std::map<std::size_t, std::size_t> finals;
  std::size_t fails = 0;
  json rows = json::array();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const CAD cad = build_cad(p.phi, p.order, ds[i], o);
    const bool ok = cad.status == Status::Complete;
    if (ok)
      ++finals[cad.leaf_count()];
    else
      ++fails;
    if (c.json) {
      rows.push_back({{"designation", designation_json(ds[i], *p.order)},
                      {"status", ok ? "complete" : "fail"},
                      {"level_counts", cad.level_counts}});
    } else {
      out << i + 1 << ". " << ds[i].to_string(*p.order) << "  ->  "
          << (ok ? counts_string(cad) : "FAIL") << "\n";
    }
  }
  if (c.json) {
    json dist = json::object();
    for (auto [k, v] : finals) dist[std::to_string(k)] = v;
    out << json{{"designations", rows}, {"final_counts", dist}, {"failures", fails}}.dump(1)
        << "\n";
  } else {
    out << ds.size() << " designation(s); final cell counts:";
    for (auto [k, v] : finals) out << " " << k << " (x" << v << ")";
    if (fails) out << "; " << fails << " FAIL";
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& input, std::size_t n, std::uint64_t seed,
               std::ostream& out) {
  CAD cad;
  Formula phi;
  std::string formula = c.formula;
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read " + input);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
      cad = load_cad(ss.str());
    } catch (const AlgebraError& e) {
      throw UsageError(e.what());
    }
    if (formula.empty()) formula = json::parse(ss.str()).value("formula", "");
    if (formula.empty()) throw UsageError("the CAD file carries no formula; pass one");
    try {
      phi = parse_formula(formula, cad.order);
    } catch (const AlgebraError& e) {
      throw UsageError(e.what());
    }
  } else {
    const Problem p = load_problem(c);
    phi = p.phi;
    cad = build_cad(p.phi, p.order, choose_designation(c, p), build_options(c));
  }
  if (cad.status == Status::Fail) {
    out << "FAIL: " << cad.failure->to_string(*cad.order) << "\n";
    return kExitFail;
  }
  const AuditReport audit = audit_structure(cad);
  const InvarianceReport inv = check_truth_invariance(cad, phi, n, seed, c.threads);
  if (c.json) {
    json mism = json::array();
    for (const auto& m : inv.mismatches) {
      json pt = json::array();
      for (const auto& q : m.point) pt.push_back(q.get_str());
      mism.push_back({{"point", pt}, {"cell", m.cell_index}, {"formula", m.formula_value}});
    }
    out << json{{"cells", audit.cells},
                {"audit_violations", audit.violations},
                {"points", inv.checked},
                {"seed", seed},
                {"mismatches", mism}}
               .dump(1)
        << "\n";
  } else {
    out << "audit: " << audit.cells << " cells, " << audit.violations.size()
        << " violation(s)\n";
    for (const auto& v : audit.violations) out << "  " << v << "\n";
    out << "truth invariance: " << inv.checked << " points (seed " << seed << "), "
        << inv.mismatches.size() << " mismatch(es)\n";
    for (const auto& m : inv.mismatches) {
      out << "  point (";
      for (std::size_t i = 0; i < m.point.size(); ++i)
        out << (i ? ", " : "") << m.point[i].get_str();
      out << ") in cell " << index_string(m.cell_index) << ": formula "
          << (m.formula_value ? "true" : "false") << "\n";
    }
  }
  return audit.ok() && inv.ok() ? kExitOk : kExitMismatch;
}

int cmd_bounds(unsigned n, unsigned m, unsigned d, unsigned l, const std::string& mode,
               bool as_json, std::ostream& out) {
  BoundParams bp{n, m, d, l};
  std::vector<BoundMode> modes;
  try {
    if (mode == "all")
      modes = {BoundMode::PFull, BoundMode::ECProjection, BoundMode::ECFull};
    else
      modes = {parse_bound_mode(mode)};
    json j{{"n", n}, {"m", m}, {"d", d}, {"l", l}};
    json bounds = json::object();
    for (BoundMode bm : modes) bounds[bound_mode_name(bm)] = cell_bound(bp, bm).get_str();
    j["cell_bound"] = bounds;
    j["dominant"] = {{"p", dominant_P(n, m, d).get_str()}};
    if (l >= 1) {
      j["dominant"]["ec-projection"] = dominant_EC_projection(n, m, d, l).get_str();
      j["dominant"]["ec-full"] = dominant_EC_full(n, m, d, l).get_str();
    }
    if (as_json) {
      out << j.dump(1) << "\n";
      return kExitOk;
    }
    out << "n=" << n << " m=" << m << " d=" << d << " l=" << l << "\n";
    for (BoundMode bm : modes)
      out << "cell bound (" << bound_mode_name(bm) << "): " << cell_bound(bp, bm).get_str()
          << "\n";
    out << "dominant term (p): " << j["dominant"]["p"].get<std::string>() << "\n";
    if (l >= 1) {
      out << "dominant term (ec-projection): "
          << j["dominant"]["ec-projection"].get<std::string>() << "\n";
      out << "dominant term (ec-full): " << j["dominant"]["ec-full"].get<std::string>()
          << "\n";
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eccad: cylindrical algebraic decomposition with equational constraints"};
  app.require_subcommand(1);

  Common build_c, prop_c, des_c, ver_c;
  bool cells = false;
  std::string output, input;
  std::size_t npoints = 1000;
  std::uint64_t seed = 42;
  unsigned bn = 3, bm = 3, bd = 2, bl = 0;
  std::string bmode = "all";
  bool bjson = false, enumerate = true;

  auto* build = app.add_subcommand("build", "build a truth-invariant CAD");
  add_common(build, build_c, true);
  build->add_flag("--cells", cells, "print the cell tree");
  build->add_option("-o,--output", output, "write the CAD as JSON to a file");

  auto* prop = app.add_subcommand("propagate", "list explicit and propagated ECs");
  add_common(prop, prop_c, false);

  auto* des = app.add_subcommand("designations", "build a CAD for every designation");
  add_common(des, des_c, false);
  des->add_flag("--enumerate", enumerate, "enumerate all designations (default)");

  auto* ver = app.add_subcommand("verify", "audit a CAD and test truth invariance");
  add_common(ver, ver_c, true);
  ver->add_option("--input", input, "CAD JSON file to check instead of building");
  ver->add_option("--n", npoints, "number of random points");
  ver->add_option("--seed", seed, "random seed");

  auto* bnd = app.add_subcommand("bounds", "cell-count bounds");
  bnd->add_option("--n", bn, "variables")->check(CLI::Range(1u, 20u));
  bnd->add_option("--m", bm, "polynomials")->check(CLI::PositiveNumber);
  bnd->add_option("--d", bd, "degree")->check(CLI::PositiveNumber);
  bnd->add_option("--l", bl, "equational constraints");
  bnd->add_option("--mode", bmode, "p-full, ec-projection, ec-full or all")
      ->check(CLI::IsMember({"p-full", "ec-projection", "ec-full", "all"}));
  bnd->add_flag("--json", bjson, "machine-readable output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_c, cells, output, out);
    if (*prop) return cmd_propagate(prop_c, out);
    if (*des) return cmd_designations(des_c, out);
    if (*ver) return cmd_verify(ver_c, input, npoints, seed, out);
    if (*bnd) return cmd_bounds(bn, bm, bd, bl, bmode, bjson, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eccad
