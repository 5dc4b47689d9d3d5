#include "eccad/algebra.hpp"

#include <algorithm>

namespace eccad {

namespace {

std::optional<std::size_t> max_var(const Polynomial& a, const Polynomial& b) {
  auto ma = a.mvar(), mb = b.mvar();
  if (!ma) return mb;
  if (!mb) return ma;
  return std::max(*ma, *mb);
}

Polynomial integer_poly(const OrderPtr& order, const Integer& c) {
  return Polynomial(order, c);
}

// Content in var: gcd of the coefficients, always nonnegative-normalized.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.order());
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content_in(p, var)).sign_normalized();
}

std::uint32_t deg_in(const Polynomial& p, std::size_t var) {
  return p.degree(var);
}

}  // namespace

MvarView mvar_view(const Polynomial& p) {
  MvarView view{p, p.mvar(), 0, {}};
  if (view.mvar) {
    view.degree = p.degree(*view.mvar);
    view.coeffs = p.coefficients(*view.mvar);
  } else {
    view.coeffs = {p};
  }
  return view;
}

ContentPrim content_prim_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) throw AlgebraError("content of the zero polynomial");
  if (!p.depends_on(var)) {
    return {p, Polynomial(p.order(), 1)};
  }
  Polynomial c = content_in(p, var);
  Polynomial prim = divide_or_throw(p, c);
  if (prim.sign_of_leading_coefficient() < 0) {
    prim = -prim;
    c = -c;
  }
  return {c, prim};
}

ContentPrim content_prim(const Polynomial& p) {
  if (p.is_zero()) throw AlgebraError("content of the zero polynomial");
  auto mv = p.mvar();
  if (!mv) return {p, Polynomial(p.order(), 1)};
  return content_prim_in(p, *mv);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var) {
  if (b.is_zero()) throw AlgebraError("pseudo-remainder by zero");
  const std::uint32_t db = deg_in(b, var);
  std::uint32_t da = deg_in(a, var);
  if (a.is_zero() || da < db) return a;
  auto bc = b.coefficients(var);
  const Polynomial& lb = bc.back();
  auto ac = a.coefficients(var);
  const OrderPtr& order = a.order();
  unsigned steps = 0;
  // Work on coefficient vectors to avoid rebuilding polynomials.
  while (!ac.empty() && ac.size() - 1 >= db) {
    const std::size_t d = ac.size() - 1;
    Polynomial la = ac.back();
    for (auto& c : ac) c *= lb;
    const std::size_t shift = d - db;
    for (std::size_t i = 0; i <= db; ++i) ac[i + shift] -= la * bc[i];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
    ++steps;
  }
  Polynomial r = Polynomial::from_coefficients(order, var, ac);
  // Scale so the result equals lb^(da-db+1) * a mod b exactly.
  const unsigned expected = da - db + 1;
  if (steps < expected) r *= lb.pow(expected - steps);
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  OrderPtr order = a.order() ? a.order() : b.order();
  if (a.is_zero()) return b.sign_normalized();
  if (b.is_zero()) return a.sign_normalized();
  if (a.is_constant() || b.is_constant()) {
    if (a.is_constant() && b.is_constant()) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(),
              b.constant_value().get_mpz_t());
      return integer_poly(order, g);
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.integer_content().get_mpz_t(),
            b.integer_content().get_mpz_t());
    return integer_poly(order, g);
  }
  const std::size_t v = *max_var(a, b);
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = divide_or_throw(a, ca), pb = divide_or_throw(b, cb);
  if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
  Polynomial g;
  for (;;) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (deg_in(r, v) == 0) {
      g = Polynomial(order, 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  if (g.depends_on(v)) g = primitive_in(g, v);
  return (c * g).sign_normalized();
}

Polynomial resultant_subresultant(const Polynomial& p, const Polynomial& q,
                                  std::size_t var) {
  const OrderPtr& order = p.order() ? p.order() : q.order();
  if (p.is_zero() || q.is_zero()) return Polynomial(order);
  Polynomial a = p, b = q;
  std::uint32_t da = deg_in(a, var), db = deg_in(b, var);
  if (da == 0 || db == 0)
    throw AlgebraError("resultant: input of degree zero in the variable");
  Integer sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da & 1u) && (db & 1u)) sign = -1;
  }
  Polynomial g(order, 1), h(order, 1);
  // Subresultant PRS (Collins / Brown), contents not removed.
  for (;;) {
    const std::uint32_t delta = deg_in(a, var) - deg_in(b, var);
    if ((deg_in(a, var) & 1u) && (deg_in(b, var) & 1u)) sign = -sign;
    Polynomial r = pseudo_remainder(a, b, var);
    a = b;
    if (r.is_zero()) return Polynomial(order);
    b = divide_or_throw(r, g * h.pow(delta));
    g = a.leading_coefficient_in(var);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_or_throw(g.pow(delta), h.pow(delta - 1));
    }
    if (deg_in(b, var) == 0) break;
  }
  const std::uint32_t dA = deg_in(a, var);
  Polynomial lb = b;  // constant in var
  Polynomial res;
  if (dA == 0) {
    res = Polynomial(order, 1);
  } else if (dA == 1) {
    res = lb;
  } else {
    res = divide_or_throw(lb.pow(dA), h.pow(dA - 1));
  }
  return res * sign;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m,
                       const OrderPtr& order) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(order, 1);
  Integer sign = 1;
  Polynomial prev(order, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(order);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_or_throw(num, prev);
      }
      m[i][k] = Polynomial(order);
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * sign;
}

Polynomial resultant_sylvester(const Polynomial& p, const Polynomial& q,
                               std::size_t var) {
  const OrderPtr& order = p.order() ? p.order() : q.order();
  const std::uint32_t dp = deg_in(p, var), dq = deg_in(q, var);
  if (p.is_zero() || q.is_zero()) return Polynomial(order);
  if (dp == 0 || dq == 0)
    throw AlgebraError("resultant: input of degree zero in the variable");
  auto pc = p.coefficients(var), qc = q.coefficients(var);
  const std::size_t n = dp + dq;
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(order)));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i) m[r][r + i] = pc[dp - i];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i) m[dq + r][r + i] = qc[dq - i];
  return determinant(std::move(m), order);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
  if (std::max(deg_in(p, var), deg_in(q, var)) > 4)
    return resultant_subresultant(p, q, var);
  return resultant_sylvester(p, q, var);
}

Polynomial discriminant(const Polynomial& p, std::size_t var) {
  const std::uint32_t d = deg_in(p, var);
  if (d == 0) throw AlgebraError("discriminant: degree zero in the variable");
  if (d == 1) return Polynomial(p.order(), 1);
  Polynomial r = resultant(p, p.derivative(var), var);
  Polynomial disc = divide_or_throw(r, p.leading_coefficient_in(var));
  if ((static_cast<unsigned long>(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw AlgebraError("squarefree part of zero");
  if (p.is_constant()) return Polynomial(p.order(), 1);
  const std::size_t v = *p.mvar();
  ContentPrim cp = content_prim_in(p, v);
  Polynomial prim = cp.primitive;
  Polynomial g = gcd(prim, prim.derivative(v));
  Polynomial sq = divide_or_throw(prim, g);
  Polynomial lower = squarefree_part(cp.content);
  return (lower * sq).integer_primitive().sign_normalized();
}

Polynomial normal_form(const Polynomial& p) { return squarefree_part(p); }

std::vector<Polynomial> squarefree_basis(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> work;
  std::optional<std::size_t> common;
  for (const auto& p : polys) {
    if (p.is_zero()) throw AlgebraError("squarefree_basis: zero input");
    auto mv = p.mvar();
    if (!mv) throw AlgebraError("squarefree_basis: constant input");
    if (common && *common != *mv)
      throw AlgebraError("squarefree_basis: mixed main variables");
    common = mv;
    Polynomial prim = content_prim_in(p, *mv).primitive;
    work.push_back(squarefree_part(prim));
  }
  canonicalize_set(work);
  // gcd splitting until pairwise coprime
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        Polynomial g = gcd(work[i], work[j]);
        if (g.is_constant()) continue;
        Polynomial a = divide_or_throw(work[i], g);
        Polynomial b = divide_or_throw(work[j], g);
        std::vector<Polynomial> next;
        for (std::size_t k = 0; k < work.size(); ++k)
          if (k != i && k != j) next.push_back(work[k]);
        for (Polynomial* q : {&a, &b, &g})
          if (!q->is_constant()) next.push_back(q->sign_normalized());
        work = std::move(next);
        canonicalize_set(work);
        changed = true;
      }
    }
  }
  return work;
}

Polynomial evaluate(const Polynomial& p,
                    const std::map<std::string, Rational>& assignment) {
  const auto& order = *p.order();
  std::vector<bool> assigned(order.size(), false);
  for (const auto& [name, value] : assignment) {
    auto idx = order.index_of(name);
    if (!idx) throw AlgebraError("evaluate: unknown variable '" + name + "'");
    assigned[*idx] = true;
  }
  for (std::size_t i = 1; i < assigned.size(); ++i)
    if (assigned[i] && !assigned[i - 1])
      throw AlgebraError("evaluate: assigned variables are not a prefix of the order");
  Polynomial r = p;
  for (const auto& [name, value] : assignment)
    r = r.substitute(*order.index_of(name), value);
  return r;
}

void canonicalize_set(std::vector<Polynomial>& polys) {
  for (auto& p : polys) p = p.sign_normalized();
  std::sort(polys.begin(), polys.end(), poly_less);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

}  // namespace eccad
