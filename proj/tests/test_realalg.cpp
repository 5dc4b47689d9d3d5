#include <cmath>
#include <random>

#include "doctest.h"
#include "eccad/realalg.hpp"

using namespace eccad;

namespace {

UPoly U(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

RealAlgebraic sqrt_of(long n, bool negative = false) {
  auto r = real_roots(U({-n, 0, 1}));
  return negative ? r.front() : r.back();
}

}  // namespace

TEST_CASE("simplest rational between") {
  CHECK(simplest_between(Rational(-1, 2), Rational(3)) == 0);
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_between(Rational(3, 2), Rational(7, 2)) == 2);
  CHECK(simplest_between(Rational(-7, 2), Rational(-3, 2)) == -2);
  CHECK(simplest_between(Rational(1), Rational(2)) == Rational(3, 2));
  CHECK(simplest_between(Rational(0), Rational(1, 10)) == Rational(1, 11));
}

TEST_CASE("Sturm counts") {
  SturmSequence s(U({-2, 0, 1}));  // x^2 - 2
  CHECK(s.count(-2, 2) == 2);
  CHECK(s.count(0, 2) == 1);
  CHECK(s.count(Rational(3, 2), 2) == 0);
}

TEST_CASE("real roots: rational and irrational") {
  // (2x - 1)(x^2 - 2)(x + 3)^2
  UPoly p = U({-1, 2}) * U({-2, 0, 1}) * U({3, 1}) * U({3, 1});
  auto r = real_roots(p);
  REQUIRE(r.size() == 4);
  CHECK(r[0].is_rational());
  CHECK(r[0].rational() == -3);
  CHECK(!r[1].is_rational());
  CHECK(r[1].approx() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(r[2].rational() == Rational(1, 2));
  CHECK(r[3].approx() == doctest::Approx(std::sqrt(2.0)));
  // irrational defpolys carry no rational roots
  CHECK(r[3].defpoly() == U({-2, 0, 1}));
}

TEST_CASE("rational roots not hit by bisection are still recognised") {
  // 3x - 1 times x^2 - 3
  auto r = real_roots(U({-1, 3}) * U({-3, 0, 1}));
  REQUIRE(r.size() == 3);
  CHECK(r[1].is_rational());
  CHECK(r[1].rational() == Rational(1, 3));
  auto r2 = real_roots(U({-2, 7}) * U({-5, 11}));  // 2/7 and 5/11
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].rational() == Rational(2, 7));
  CHECK(r2[1].rational() == Rational(5, 11));
}

TEST_CASE("comparison is a total order consistent with floating values") {
  std::vector<RealAlgebraic> xs;
  for (long n : {2, 3, 5, 8}) {
    for (auto& r : real_roots(U({-n, 0, 1}))) xs.push_back(r);
  }
  xs.emplace_back(Rational(3, 2));
  xs.emplace_back(Rational(-7, 5));
  for (auto& r : real_roots(U({-4, 0, 0, 1}))) xs.push_back(r);  // cbrt 4
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(compare(xs[i], xs[i]) == 0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      int c = compare(xs[i], xs[j]);
      CHECK(c == -compare(xs[j], xs[i]));
      double a = xs[i].approx(), b = xs[j].approx();
      if (a < b - 1e-9) CHECK(c == -1);
      if (a > b + 1e-9) CHECK(c == 1);
    }
  }
  // same number, different defining polynomials
  auto a = sqrt_of(2);
  auto b = real_roots(U({-2, 0, 1}) * U({-3, 0, 1}));
  CHECK(compare(a, b[2]) == 0);
}

TEST_CASE("sign_at agrees with rational evaluation") {
  auto o = make_order({"x", "y", "z"});
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> c(-4, 4), den(1, 6), e(0, 2);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Term> terms;
    for (int t = 0; t < 4; ++t)
      terms.push_back({{static_cast<std::uint32_t>(e(rng)),
                        static_cast<std::uint32_t>(e(rng)),
                        static_cast<std::uint32_t>(e(rng))},
                       Integer(c(rng))});
    Polynomial g = Polynomial::from_terms(o, terms);
    std::vector<Rational> q;
    SamplePoint pt;
    for (int k = 0; k < 3; ++k) {
      q.emplace_back(c(rng), den(rng));
      q.back().canonicalize();
      pt.emplace_back(q.back());
    }
    Rational v = 0;
    for (const auto& t : g.terms()) {
      Rational m(t.coef);
      for (int k = 0; k < 3; ++k)
        for (std::uint32_t p = 0; p < t.exps[k]; ++p) m *= q[k];
      v += m;
    }
    CHECK(sign_at(g, pt) == sgn(v));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("sign_at certifies zeros at irrational points") {
  auto o = make_order({"x", "y", "z"});
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  SamplePoint pt{sqrt_of(2), sqrt_of(3)};
  CHECK(sign_at(P("x^2 - 2"), pt) == 0);
  CHECK(sign_at(P("x - y"), pt) == -1);
  CHECK(sign_at(P("x*y"), pt) == 1);
  // (xy)^2 = 6
  CHECK(sign_at(P("x^2*y^2 - 6"), pt) == 0);
  // sqrt2 + sqrt3 is a root of t^4 - 10t^2 + 1
  auto s = real_roots(U({1, 0, -10, 0, 1})).back();
  SamplePoint pt3{sqrt_of(2), sqrt_of(3), s};
  CHECK(sign_at(P("z - x - y"), pt3) == 0);
  CHECK(sign_at(P("z - x - y - 1"), pt3) == -1);
  // shares the state of pt3's coordinates
  CHECK(sign_at(P("z^2 - 5"), pt3) == 1);
}

TEST_CASE("roots_at over rational and irrational samples") {
  auto o = make_order({"x", "y"});
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  SamplePoint at1{RealAlgebraic(Rational(1))};
  auto r = roots_at(P("y^2 - x - 1"), at1);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[1].approx() == doctest::Approx(std::sqrt(2.0)));

  SamplePoint at_s2{sqrt_of(2)};
  auto r2 = roots_at(P("y^2 - 2*x*y + 1"), at_s2);  // y = sqrt2 +- 1
  REQUIRE(r2.roots.size() == 2);
  CHECK(r2.roots[0].approx() == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(r2.roots[1].approx() == doctest::Approx(std::sqrt(2.0) + 1));

  auto r3 = roots_at(P("y - x"), at_s2);
  REQUIRE(r3.roots.size() == 1);
  CHECK(compare(r3.roots[0], at_s2[0]) == 0);

  auto n = roots_at(P("(x^2 - 2)*y + x^2 - 2"), at_s2);
  CHECK(n.nullified);
  auto none = roots_at(P("(x^2 - 2)*y + 1"), at_s2);
  CHECK(!none.nullified);
  CHECK(none.roots.empty());
  auto conj = roots_at(P("(x + y)*(y - 3)"), at_s2);
  REQUIRE(conj.roots.size() == 2);
  CHECK(conj.roots[0].approx() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(conj.roots[1].rational() == 3);
}

TEST_CASE("roots_at with two irrational coordinates") {
  auto o = make_order({"x", "y", "z"});
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  SamplePoint pt{sqrt_of(2), sqrt_of(3)};
  auto r = roots_at(P("z^2 - x*y"), pt);  // z = +- 6^(1/4)
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[1].approx() == doctest::Approx(std::pow(6.0, 0.25)));
  // x - y vanishes nowhere here, and the conjugate product degenerates
  auto d = roots_at(P("(x - y)*z - 1"), pt);
  REQUIRE(d.roots.size() == 1);
  CHECK(d.roots[0].approx() == doctest::Approx(1 / (std::sqrt(2.0) - std::sqrt(3.0))));
}
