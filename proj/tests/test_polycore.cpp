#include <random>

#include "doctest.h"
#include "eccad/algebra.hpp"
#include "eccad/polynomial.hpp"

using namespace eccad;

namespace {

OrderPtr xyz() { return make_order({"x", "y", "z"}); }

Polynomial P(const char* s, const OrderPtr& o) { return parse_polynomial(s, o); }

// Cofactor expansion along the first row; independent of Bareiss.
Polynomial laplace(const std::vector<std::vector<Polynomial>>& m,
                   const OrderPtr& o) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(o);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Polynomial t = m[0][j] * laplace(minor, o);
    if (j % 2) acc -= t; else acc += t;
  }
  return acc;
}

Polynomial sylvester_oracle(const Polynomial& p, const Polynomial& q,
                            std::size_t v) {
  const auto& o = p.order();
  auto pc = p.coefficients(v), qc = q.coefficients(v);
  const std::size_t dp = pc.size() - 1, dq = qc.size() - 1, n = dp + dq;
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(o)));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i) m[r][r + i] = pc[dp - i];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i) m[dq + r][r + i] = qc[dq - i];
  return laplace(m, o);
}

Polynomial random_poly(std::mt19937& rng, const OrderPtr& o, int max_deg,
                       int max_terms, int coef = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> c(-coef, coef);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e(o->size());
    for (auto& x : e) x = deg(rng);
    terms.push_back({e, Integer(c(rng))});
  }
  return Polynomial::from_terms(o, terms);
}

}  // namespace

TEST_CASE("parse and print") {
  auto o = xyz();
  CHECK(P("x - y + z^2", o).to_string() == "z^2 - y + x");
  CHECK(P("2x^2 - 1", o).to_string() == "2*x^2 - 1");
  CHECK(P("(x+1)^2", o) == P("x^2 + 2*x + 1", o));
  CHECK(P("-(x-y)", o) == P("y - x", o));
  CHECK(P("0", o).is_zero());
  CHECK_THROWS_AS(P("x + w", o), ParseError);
  CHECK_THROWS_AS(P("x +", o), ParseError);
  CHECK_THROWS_AS(P("x )", o), ParseError);
}

TEST_CASE("print/parse round trip on random polynomials") {
  auto o = xyz();
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, o, 4, 6, 50);
    CHECK(P(p.to_string().c_str(), o) == p);
  }
}

TEST_CASE("basic structure") {
  auto o = xyz();
  Polynomial p = P("x*z^2 + y*z - 3", o);
  CHECK(p.mvar() == std::optional<std::size_t>(2));
  CHECK(p.degree(2) == 2);
  CHECK(p.total_degree() == 3);
  CHECK(P("5", o).mvar() == std::nullopt);
  CHECK(p.leading_coefficient_in(2) == P("x", o));
  CHECK(p.derivative(2) == P("2*x*z + y", o));
  CHECK(P("2x+4", o).integer_primitive() == P("x+2", o));
  CHECK(P("-x+y", o).sign_normalized() == P("x - y", o).sign_normalized());
  CHECK(P("x^2 - y", o).substitute(0, Rational(1, 2)) == P("1 - 4y", o));
}

TEST_CASE("exact division") {
  auto o = xyz();
  Polynomial a = P("(x+y)*(x^2-z+1)", o);
  CHECK(divide_exact(a, P("x+y", o)) == P("x^2-z+1", o));
  CHECK_FALSE(divide_exact(a, P("x+z", o)).has_value());
  CHECK_FALSE(divide_exact(P("x", o), P("2", o)).has_value());
}

TEST_CASE("gcd and content") {
  auto o = xyz();
  Polynomial g = gcd(P("(x-y)*(z+1)*(x+2)", o), P("(x-y)*(z-1)*(x+2)^2", o));
  CHECK(g == P("(x-y)*(x+2)", o).sign_normalized());
  CHECK(gcd(P("6x", o), P("4y", o)) == P("2", o));
  auto cp = content_prim(P("(x^2-1)*(z^2 + y)", o));
  CHECK(cp.content == P("x^2-1", o));
  CHECK(cp.primitive == P("z^2+y", o));
  auto cp2 = content_prim(P("-2*y*z", o));
  CHECK(cp2.content == P("-2y", o));
  CHECK(cp2.primitive == P("z", o));
}

TEST_CASE("resultant known values") {
  auto o = xyz();
  // res_z(z^2 + x, z - y) = y^2 + x
  CHECK(resultant(P("z^2 + x", o), P("z - y", o), 2) == P("y^2 + x", o));
  CHECK(resultant(P("z - y", o), P("z^2 + x", o), 2) == P("y^2 + x", o));
  // common root
  CHECK(resultant(P("(z-x)*(z+1)", o), P("(z-x)*(z-2)", o), 2).is_zero());
  CHECK(discriminant(P("z^2 + y*z + x", o), 2) == P("y^2 - 4x", o));
  CHECK(discriminant(P("x*z + 1", o), 2) == P("1", o));
  // x^3 + p x + q: -4p^3 - 27q^2
  CHECK(discriminant(P("z^3 + x*z + y", o), 2) == P("-4x^3 - 27y^2", o));
}

TEST_CASE("resultant agrees with Laplace expanded Sylvester determinant") {
  auto o = xyz();
  std::mt19937 rng(11);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_poly(rng, o, 3, 5, 4);
    Polynomial q = random_poly(rng, o, 3, 4, 4);
    if (p.degree(2) == 0 || q.degree(2) == 0) continue;
    Polynomial oracle = sylvester_oracle(p, q, 2);
    CHECK(resultant_subresultant(p, q, 2) == oracle);
    CHECK(resultant_sylvester(p, q, 2) == oracle);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("resultant vanishes iff common factor; multiplicative") {
  auto o = xyz();
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_poly(rng, o, 2, 3, 3) + P("z", o);
    Polynomial b = random_poly(rng, o, 2, 3, 3) + P("z^2", o);
    Polynomial c = random_poly(rng, o, 2, 3, 3) + P("z", o);
    if (a.degree(2) == 0 || b.degree(2) == 0 || c.degree(2) == 0) continue;
    Polynomial rab = resultant(a, b, 2);
    CHECK(rab.is_zero() == (gcd(a, b).degree(2) > 0));
    CHECK(resultant(a * c, b, 2) == rab * resultant(c, b, 2));
    CHECK(resultant(a * c, c * b, 2).is_zero());
  }
}

TEST_CASE("gcd divides both arguments") {
  auto o = xyz();
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_poly(rng, o, 2, 3, 3);
    Polynomial a = f * random_poly(rng, o, 2, 3, 3);
    Polynomial b = f * random_poly(rng, o, 2, 3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial g = gcd(a, b);
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
    CHECK(divide_exact(g, f.integer_primitive()).has_value());
  }
}

TEST_CASE("squarefree part and basis") {
  auto o = xyz();
  CHECK(squarefree_part(P("(x^2-1)^2", o)) == P("x^2-1", o));
  CHECK(squarefree_part(P("4y^2", o)) == P("y", o));
  CHECK(squarefree_part(P("(x+1)^2*(z-y)^3", o)) == P("(x+1)*(z-y)", o).sign_normalized());
  auto basis = squarefree_basis({P("(z-x)*(z+1)", o), P("(z-x)^2*(z-y)", o)});
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      CHECK(gcd(basis[i], basis[j]).is_constant());
  CHECK_THROWS_AS(squarefree_basis({P("z", o), P("y", o)}), AlgebraError);
}

TEST_CASE("squarefree basis properties on random input") {
  auto o = xyz();
  std::mt19937 rng(9);
  for (int i = 0; i < 20; ++i) {
    Polynomial a = P("z", o) + random_poly(rng, o, 1, 2, 2);
    Polynomial b = P("z", o) + random_poly(rng, o, 1, 2, 2);
    std::vector<Polynomial> in{a * b, a * a, b + P("z^2", o)};
    bool ok = true;
    for (auto& p : in) ok = ok && p.mvar() == std::optional<std::size_t>(2);
    if (!ok) continue;
    auto basis = squarefree_basis(in);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      CHECK(squarefree_part(basis[k]) == basis[k]);
      for (std::size_t j = k + 1; j < basis.size(); ++j)
        CHECK(gcd(basis[k], basis[j]).is_constant());
    }
    // every input's primitive part factors over the basis
    for (auto& p : in) {
      Polynomial rest = content_prim(p).primitive;
      for (auto& bk : basis)
        while (auto q = divide_exact(rest, bk)) rest = *q;
      CHECK(rest.is_constant());
    }
  }
}

TEST_CASE("evaluate on a prefix") {
  auto o = xyz();
  Polynomial p = P("z^2 + x*y - 1", o);
  CHECK(evaluate(p, {{"x", Rational(2)}, {"y", Rational(3)}}) == P("z^2 + 5", o));
  CHECK_THROWS_AS(evaluate(p, {{"y", Rational(1)}}), AlgebraError);
}
