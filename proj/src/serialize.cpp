#include "eccad/serialize.hpp"

#include "eccad/upoly.hpp"

namespace eccad {

using nlohmann::json;

namespace {

Rational parse_rational(const json& j) {
  if (!j.is_string()) throw AlgebraError("cad json: rational must be a string");
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0)
    throw AlgebraError("cad json: bad rational '" + j.get<std::string>() + "'");
  r.canonicalize();
  return r;
}

json poly_list(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

std::vector<Polynomial> parse_poly_list(const json& j, const OrderPtr& order) {
  std::vector<Polynomial> out;
  for (const auto& s : j) out.push_back(parse_polynomial(s.get<std::string>(), order));
  return out;
}

json sample_to_json(const SamplePoint& s) {
  json a = json::array();
  for (const auto& c : s) a.push_back(coordinate_to_json(c));
  return a;
}

SamplePoint sample_from_json(const json& j) {
  SamplePoint s;
  for (const auto& c : j) s.push_back(coordinate_from_json(c));
  return s;
}

json index_json(const std::vector<std::uint32_t>& idx) { return json(idx); }

json truth_json(Truth t) {
  switch (t) {
    case Truth::True: return true;
    case Truth::False: return false;
    case Truth::Unset: break;
  }
  return nullptr;
}

json cell_to_json(const Cell& c) {
  json j;
  j["index"] = index_json(c.index);
  j["sample"] = sample_to_json(c.sample);
  j["truth"] = truth_json(c.truth);
  if (c.lift == kTrivialLift)
    j["lift"] = "trivial";
  else if (c.lift == kLeaf)
    j["lift"] = nullptr;
  else
    j["lift"] = c.lift;
  j["trivial"] = c.trivial;
  json ch = json::array();
  for (const auto& k : c.children) ch.push_back(cell_to_json(k));
  j["children"] = std::move(ch);
  return j;
}

Cell cell_from_json(const json& j) {
  Cell c;
  c.index = j.at("index").get<std::vector<std::uint32_t>>();
  c.sample = sample_from_json(j.at("sample"));
  const json& t = j.at("truth");
  c.truth = t.is_null() ? Truth::Unset : (t.get<bool>() ? Truth::True : Truth::False);
  const json& l = j.at("lift");
  if (l.is_null())
    c.lift = kLeaf;
  else if (l.is_string() && l.get<std::string>() == "trivial")
    c.lift = kTrivialLift;
  else
    c.lift = l.get<int>();
  c.trivial = j.value("trivial", false);
  for (const auto& k : j.at("children")) c.children.push_back(cell_from_json(k));
  return c;
}

std::size_t var_index(const VariableOrder& order, const json& j) {
  const auto k = order.index_of(j.get<std::string>());
  if (!k) throw AlgebraError("cad json: unknown variable '" + j.get<std::string>() + "'");
  return *k;
}

Operator parse_operator(const std::string& s) {
  for (Operator op : {Operator::None, Operator::P, Operator::PF, Operator::PFStar})
    if (operator_name(op) == s) return op;
  throw AlgebraError("cad json: unknown operator '" + s + "'");
}

}  // namespace

json coordinate_to_json(const RealAlgebraic& a) {
  if (a.is_rational()) return a.rational().get_str();
  const auto iv = a.canonical_interval();
  const UPoly poly = a.defpoly();
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
  return json{{"defpoly", coeffs}, {"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}};
}

RealAlgebraic coordinate_from_json(const json& j) {
  if (j.is_string()) return RealAlgebraic(parse_rational(j));
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("defpoly")) coeffs.emplace_back(c.get<std::string>());
  UPoly p(std::move(coeffs));
  const Rational lo = parse_rational(j.at("lo")), hi = parse_rational(j.at("hi"));
  if (SturmSequence(p).count(lo, hi) != 1)
    throw AlgebraError("cad json: interval does not isolate exactly one root");
  return RealAlgebraic::from_root(std::move(p), lo, hi);
}

json cad_to_json(const CAD& cad, const std::string& formula) {
  const auto& order = *cad.order;
  json j;
  j["format"] = kCadFormat;
  j["order"] = order.names();
  j["formula"] = formula;
  json des = json::array();
  for (std::size_t k = 0; k < cad.designation.size(); ++k)
    des.push_back(cad.designation.ecs[k] ? json(cad.designation.ecs[k]->to_string())
                                         : json(nullptr));
  j["designation"] = std::move(des);
  json layers = json::array();
  for (std::size_t k = 0; k < cad.layers.levels.size(); ++k) {
    const auto& L = cad.layers.levels[k];
    layers.push_back({{"variable", order.name(k)},
                      {"operator", operator_name(L.op)},
                      {"A", poly_list(L.A)},
                      {"basis", poly_list(L.B)},
                      {"ec_factors", poly_list(L.F)},
                      {"passed_down", poly_list(L.C)}});
  }
  j["projection"] = std::move(layers);
  json lift = json::array();
  for (const auto& ls : cad.liftsets)
    lift.push_back({{"id", ls.id}, {"variable", order.name(ls.level)},
                    {"polynomials", poly_list(ls.polys)}});
  j["liftsets"] = std::move(lift);
  json pruned = json::array();
  for (std::size_t k = 0; k < cad.pruned_levels.size(); ++k)
    if (cad.pruned_levels[k]) pruned.push_back(order.name(k));
  j["pruned_levels"] = std::move(pruned);
  j["status"] = cad.status == Status::Complete ? "complete" : "fail";
  if (cad.failure) {
    const auto& f = *cad.failure;
    j["failure"] = {{"variable", order.name(f.level)},
                    {"polynomial", f.poly.to_string()},
                    {"cell_index", index_json(f.cell_index)},
                    {"sample", sample_to_json(f.sample)},
                    {"message", f.to_string(order)}};
  } else {
    j["failure"] = nullptr;
  }
  j["level_counts"] = cad.level_counts;
  j["root"] = cell_to_json(cad.root);
  return j;
}

CAD cad_from_json(const json& j) {
  if (j.value("format", "") != kCadFormat)
    throw AlgebraError(std::string("cad json: expected format ") + kCadFormat);
  CAD cad;
  cad.order = make_order(j.at("order").get<std::vector<std::string>>());
  const auto& order = cad.order;
  const std::size_t n = order->size();
  cad.designation = Designation(n);
  const json& des = j.at("designation");
  if (des.size() != n) throw AlgebraError("cad json: designation size mismatch");
  for (std::size_t k = 0; k < n; ++k)
    if (!des[k].is_null())
      cad.designation.ecs[k] = parse_polynomial(des[k].get<std::string>(), order);
  cad.layers.order = order;
  for (const auto& L : j.value("projection", json::array())) {
    ProjectionLevel lvl;
    lvl.op = parse_operator(L.at("operator").get<std::string>());
    lvl.A = parse_poly_list(L.at("A"), order);
    lvl.B = parse_poly_list(L.at("basis"), order);
    lvl.F = parse_poly_list(L.at("ec_factors"), order);
    lvl.C = parse_poly_list(L.at("passed_down"), order);
    cad.layers.levels.push_back(std::move(lvl));
  }
  for (const auto& ls : j.at("liftsets")) {
    LiftSet s;
    s.id = ls.at("id").get<int>();
    s.level = var_index(*order, ls.at("variable"));
    s.polys = parse_poly_list(ls.at("polynomials"), order);
    cad.liftsets.push_back(std::move(s));
  }
  cad.pruned_levels.assign(n, false);
  for (const auto& v : j.at("pruned_levels"))
    cad.pruned_levels[var_index(*order, v)] = true;
  const std::string status = j.at("status").get<std::string>();
  if (status != "complete" && status != "fail")
    throw AlgebraError("cad json: bad status '" + status + "'");
  cad.status = status == "complete" ? Status::Complete : Status::Fail;
  if (!j.at("failure").is_null()) {
    const json& f = j.at("failure");
    cad.failure = FailureWitness{var_index(*order, f.at("variable")),
                                 parse_polynomial(f.at("polynomial").get<std::string>(), order),
                                 f.at("cell_index").get<std::vector<std::uint32_t>>(),
                                 sample_from_json(f.at("sample"))};
  }
  cad.root = cell_from_json(j.at("root"));
  cad.level_counts = j.at("level_counts").get<std::vector<std::size_t>>();
  return cad;
}

std::string save_cad(const CAD& cad, const std::string& formula) {
  return cad_to_json(cad, formula).dump(1);
}

CAD load_cad(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("cad json: ") + e.what());
  }
  try {
    return cad_from_json(j);
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("cad json: ") + e.what());
  }
}

}  // namespace eccad
