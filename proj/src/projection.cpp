#include "eccad/projection.hpp"

#include <algorithm>

#include "eccad/algebra.hpp"

namespace eccad {

namespace {

// Raw polynomials deduplicated by their squarefree normal form.
class FactorSet {
 public:
  void insert(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return;
    Polynomial nf = normal_form(p);
    if (nf.is_constant()) return;
    for (const auto& n : normal_)
      if (n == nf) return;
    raw_.push_back(p);
    normal_.push_back(std::move(nf));
  }
  void insert_all(const std::vector<Polynomial>& ps) {
    for (const auto& p : ps) insert(p);
  }
  std::vector<Polynomial> sorted() const {
    std::vector<Polynomial> out = raw_;
    std::stable_sort(out.begin(), out.end(), poly_less);
    return out;
  }

 private:
  std::vector<Polynomial> raw_, normal_;
};

bool contains(const std::vector<Polynomial>& set, const Polynomial& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

std::vector<Polynomial> complement(const std::vector<Polynomial>& B,
                                   const std::vector<Polynomial>& F) {
  std::vector<Polynomial> out;
  for (const auto& b : B)
    if (!contains(F, b)) out.push_back(b);
  return out;
}

void add_P(FactorSet& out, const std::vector<Polynomial>& B, std::size_t var,
           const ProjectionOptions& opts) {
  for (const auto& b : B) {
    out.insert_all(reduced_coefficients(b, var, opts.strict_coefficients));
    if (b.degree(var) >= 2) out.insert(discriminant(b, var));
  }
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      out.insert(resultant(B[i], B[j], var));
}

void add_PF(FactorSet& out, const std::vector<Polynomial>& B,
            const std::vector<Polynomial>& F, std::size_t var,
            const ProjectionOptions& opts) {
  add_P(out, F, var, opts);
  for (const auto& g : complement(B, F))
    for (const auto& f : F) out.insert(resultant(f, g, var));
}

}  // namespace

std::string operator_name(Operator op) {
  switch (op) {
    case Operator::None: return "none";
    case Operator::P: return "P";
    case Operator::PF: return "P_F";
    case Operator::PFStar: return "P_F*";
  }
  return "?";
}

std::vector<Polynomial> reduced_coefficients(const Polynomial& p, std::size_t var,
                                             bool strict) {
  std::vector<Polynomial> out;
  auto cs = p.coefficients(var);
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    out.push_back(cs[i]);
    if (!strict && cs[i].is_constant()) break;
  }
  return out;
}

std::vector<Polynomial> proj_P(const std::vector<Polynomial>& B, std::size_t var,
                               const ProjectionOptions& opts) {
  FactorSet out;
  add_P(out, B, var, opts);
  return out.sorted();
}

std::vector<Polynomial> proj_PF(const std::vector<Polynomial>& B,
                                const std::vector<Polynomial>& F, std::size_t var,
                                const ProjectionOptions& opts) {
  FactorSet out;
  add_PF(out, B, F, var, opts);
  return out.sorted();
}

std::vector<Polynomial> proj_PFstar(const std::vector<Polynomial>& B,
                                    const std::vector<Polynomial>& F,
                                    std::size_t var,
                                    const ProjectionOptions& opts) {
  FactorSet out;
  add_PF(out, B, F, var, opts);
  const auto rest = complement(B, F);
  if (opts.star_uses_resultants) {
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        out.insert(resultant(rest[i], rest[j], var));
  } else {
    for (const auto& g : rest)
      if (g.degree(var) >= 2) out.insert(discriminant(g, var));
  }
  return out.sorted();
}

void insert_projection_factor(std::vector<Polynomial>& set, const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return;
  Polynomial nf = normal_form(p);
  if (nf.is_constant()) return;
  for (const auto& q : set)
    if (normal_form(q) == nf) return;
  set.push_back(p);
}

std::vector<Operator> ProjectionLayers::operator_trace() const {
  std::vector<Operator> out;
  for (std::size_t k = levels.size(); k-- > 1;) out.push_back(levels[k].op);
  return out;
}

ProjectionLayers projection_phase(const OrderPtr& order,
                                  const std::vector<Polynomial>& An,
                                  const Designation& d,
                                  const ProjectionOptions& opts) {
  const std::size_t n = order->size();
  if (d.size() != n)
    throw AlgebraError("designation size does not match the variable order");
  ProjectionLayers layers;
  layers.order = order;
  layers.levels.resize(n);

  FactorSet start;
  start.insert_all(An);
  std::vector<Polynomial> A = start.sorted();

  for (std::size_t k = n; k-- > 0;) {
    ProjectionLevel& L = layers.levels[k];
    L.A = A;
    FactorSet C;
    std::vector<Polynomial> prims;
    for (const auto& p : A) {
      const auto mv = p.mvar();
      if (!mv) continue;
      if (*mv > k) throw AlgebraError("projection: polynomial above its level");
      if (*mv < k) {
        C.insert(normal_form(p));
        continue;
      }
      ContentPrim cp = content_prim(p);
      if (!cp.content.is_constant()) C.insert(normal_form(cp.content));
      prims.push_back(cp.primitive);
    }
    const std::optional<Polynomial>& E = d.ecs[k];
    if (E) {
      if (E->mvar() != std::optional<std::size_t>(k))
        throw AlgebraError("designated EC " + E->to_string() +
                           " has the wrong main variable");
      if (!content_prim(*E).content.is_constant())
        throw AlgebraError("designated EC " + E->to_string() + " is not primitive");
      prims.push_back(*E);
    }
    if (!prims.empty()) {
      L.B = squarefree_basis(prims);
      if (E)
        for (const auto& b : L.B)
          if (divide_exact(*E, b)) L.F.push_back(b);
    }
    if (E && L.F.empty())
      throw AlgebraError("designated EC vanished from the basis");
    L.C = C.sorted();
    if (k == 0) break;

    FactorSet next;
    next.insert_all(L.C);
    if (!L.B.empty()) {
      if (L.F.empty()) {
        L.op = Operator::P;
        next.insert_all(proj_P(L.B, k, opts));
      } else if (k == n - 1 || k == 1) {
        L.op = Operator::PF;
        next.insert_all(proj_PF(L.B, L.F, k, opts));
      } else {
        L.op = Operator::PFStar;
        next.insert_all(proj_PFstar(L.B, L.F, k, opts));
      }
    }
    A = next.sorted();
  }
  return layers;
}

}  // namespace eccad
