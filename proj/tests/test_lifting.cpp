#include <random>

#include "doctest.h"
#include "eccad/cad.hpp"
#include "eccad/serialize.hpp"
#include "eccad/upoly.hpp"
#include "eccad/verify.hpp"
#include "examples.hpp"

using namespace eccad;
using namespace eccad::testing;

namespace {

BuildOptions opts(PrunePolicy p, bool full = false) {
  BuildOptions o;
  o.prune = p;
  o.full_lift = full;
  return o;
}

// Least q, then least |p|, with a < p/q < b, by enumeration.
Rational brute_simplest(const Rational& a, const Rational& b) {
  for (long q = 1;; ++q) {
    std::optional<Rational> best;
    const Rational aq = a * q;
    Integer lo;
    mpz_fdiv_q(lo.get_mpz_t(), aq.get_num_mpz_t(), aq.get_den_mpz_t());
    lo += 1;
    for (Integer p = lo; Rational(p, q) < b; ++p) {
      Rational r(p, q);
      r.canonicalize();
      if (r.get_den() != q) continue;
      if (!best || abs(r.get_num()) < abs(best->get_num())) best = r;
    }
    if (best) return *best;
  }
}

RealAlgebraic root_of(std::vector<long> coeffs, std::size_t which) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return real_roots(UPoly(c)).at(which);
}

}  // namespace

TEST_CASE("base phase") {
  auto o = parse_order("v,u");
  CHECK(base_phase({P("v^2", o)}).size() == 3);
  CHECK(base_phase({}).size() == 1);
  auto x = parse_order("x");
  auto cells = base_phase({P("2*x^2-1", x)});
  REQUIRE(cells.size() == 5);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells[i].index == std::vector<std::uint32_t>{std::uint32_t(i + 1)});
    CHECK(cells[i].is_section() == (i % 2 == 1));
  }
  CHECK(cells[0].sample[0] == RealAlgebraic(Rational(-2)));
  CHECK(cells[2].sample[0] == RealAlgebraic(Rational(0)));
  CHECK(cells[4].sample[0] == RealAlgebraic(Rational(2)));
}

TEST_CASE("stack without roots has one child") {
  auto o = parse_order("x,y");
  Cell c;
  c.index = {1};
  c.sample = {RealAlgebraic(Rational(3))};
  auto kids = gen_stack(c, {P("y^2+x", o)});
  REQUIRE(kids.size() == 1);
  CHECK(kids[0].index == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("nullified lifting polynomial throws") {
  auto o = parse_order("x,y");
  Cell c;
  c.index = {2};
  c.sample = {RealAlgebraic(Rational(1))};
  CHECK_THROWS_AS(gen_stack(c, {P("(x-1)*y + x - 1", o)}), NullifiedError);
}

TEST_CASE("trivial extension") {
  Cell c;
  c.index = {3, 1};
  c.sample = {RealAlgebraic(Rational(1)), RealAlgebraic(Rational(2))};
  Cell t = extend_trivial(c);
  CHECK(t.index == std::vector<std::uint32_t>{3, 1, 1});
  CHECK(t.trivial);
  CHECK(t.sample.size() == 3);
}

TEST_CASE("sector samples are the simplest rationals in the gap") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> n(-40, 40), d(1, 9);
  for (int i = 0; i < 400; ++i) {
    Rational a(n(rng), d(rng)), b(n(rng), d(rng));
    a.canonicalize();
    b.canonicalize();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    CHECK(sector_sample(a, b) == brute_simplest(a, b));
  }
  auto s2 = root_of({-2, 0, 1}, 1), s3 = root_of({-3, 0, 1}, 1);
  CHECK(sector_sample(s2, s3) == Rational(3, 2));
  CHECK(sector_sample(root_of({-2, 0, 1}, 0), s2) == 0);
  // (1, sqrt(1.000001)): 1 + 1/k needs k > 2000000
  auto close = root_of({-1000001, 0, 1000000}, 1);
  CHECK(sector_sample(Rational(1), close) == Rational(2000002, 2000001));
  CHECK(below_sample(s2) == 0);
  CHECK(above_sample(s2) == 3);
  CHECK(below_sample(Rational(2)) == 1);
  CHECK_THROWS(sector_sample(s2, s2));
}

TEST_CASE("sphere example: pruned, unpruned and full lift") {
  auto e = sphere_example();
  auto pruned = build_cad(e.phi, e.order, e.designation);
  CHECK(pruned.level_counts == std::vector<std::size_t>{5, 15, 25});
  auto unpruned = build_cad(e.phi, e.order, e.designation, opts(PrunePolicy::None));
  CHECK(unpruned.level_counts == std::vector<std::size_t>{5, 15, 45});
  auto full = build_cad(e.phi, e.order, e.designation, opts(PrunePolicy::None, true));
  CHECK(pruned.leaf_count() <= unpruned.leaf_count());
  CHECK(unpruned.leaf_count() <= full.leaf_count());

  // 5 section cells of R^2 lifted, 10 extended trivially
  std::size_t lifted = 0, trivial = 0;
  for (const Cell* c : pruned.cells_at_level(2)) {
    if (c->lift == kTrivialLift) {
      ++trivial;
      CHECK_FALSE(c->is_section());
    } else {
      ++lifted;
      CHECK(c->is_section());
    }
  }
  CHECK(lifted == 5);
  CHECK(trivial == 10);
}

TEST_CASE("sphere example: true cells lie on y = 0, z = -x") {
  auto e = sphere_example();
  auto cad = build_cad(e.phi, e.order, e.designation);
  CHECK(cad.true_leaf_count() > 0);
  for (const Cell* c : cad.leaves()) {
    if (c->truth != Truth::True) continue;
    CHECK(c->sample[1] == RealAlgebraic(Rational(0)));
    CHECK(sign_at(P("z+x", e.order), c->sample) == 0);
  }
}

TEST_CASE("five variable example") {
  auto e = five_var_example();
  auto cad = build_cad(e.phi, e.order, e.designation);
  CHECK(cad.level_counts == std::vector<std::size_t>{3, 13, 23, 53, 113});
  CHECK(cad.status == Status::Complete);
  for (const Cell* c : cad.leaves()) {
    if (c->truth != Truth::True) continue;
    CHECK(sign_at(P("u^2-v^2", e.order), c->sample) == 0);
    CHECK(c->sample[2] == RealAlgebraic(Rational(-1)));
    CHECK(c->sample[3] == RealAlgebraic(Rational(0)));
    CHECK(c->sample[4] == RealAlgebraic(Rational(1)));
  }
  auto every = build_cad(e.phi, e.order, e.designation, opts(PrunePolicy::EveryLevel));
  CHECK(every.level_counts == std::vector<std::size_t>{3, 13, 23, 33, 53});
  auto none = build_cad(e.phi, e.order, e.designation, opts(PrunePolicy::None));
  CHECK(cad.leaf_count() <= none.leaf_count());
}

TEST_CASE("pruning policies") {
  auto e = five_var_example();
  CHECK(pruned_levels(e.designation, PrunePolicy::Alternating) ==
        std::vector<bool>{false, false, true, false, true});
  CHECK(pruned_levels(e.designation, PrunePolicy::EveryLevel) ==
        std::vector<bool>{false, false, true, true, true});
  CHECK(pruned_levels(e.designation, PrunePolicy::None) == std::vector<bool>(5, false));
}

TEST_CASE("pruning never changes the truth value at a sample point") {
  for (auto e : {sphere_example(), five_var_example()}) {
    auto pruned = build_cad(e.phi, e.order, e.designation);
    auto unpruned = build_cad(e.phi, e.order, e.designation, opts(PrunePolicy::None));
    for (const Cell* c : unpruned.leaves())
      CHECK(locate(pruned, c->sample).truth == c->truth);
    for (const Cell* c : pruned.leaves())
      if (!c->trivial) CHECK(locate(unpruned, c->sample).truth == c->truth);
  }
}

TEST_CASE("univariate input") {
  auto o = parse_order("x");
  auto phi = parse_formula("x^2-1=0", o);
  Designation d(1);
  d.ecs[0] = P("x^2-1", o);
  auto cad = build_cad(phi, o, d);
  CHECK(cad.leaf_count() == 5);
  CHECK(cad.true_leaf_count() == 2);
}

TEST_CASE("a tautology labels every evaluated leaf true") {
  auto o = parse_order("x,y");
  auto phi = parse_formula("0=0 /\\ x^2+y^2-1<=0 \\/ 0=0", o);
  auto cad = build_cad(phi, o, Designation(2));
  for (const Cell* c : cad.leaves()) CHECK(c->truth == Truth::True);
}

TEST_CASE("nullified designated EC gives a deterministic FAIL") {
  auto o = parse_order("x,y,z");
  auto phi = parse_formula("(x-1)*z + (y-1) = 0 /\\ z > 0", o);
  Designation d(3);
  d.ecs[2] = P("(x-1)*z + y - 1", o);
  std::optional<std::string> first;
  for (unsigned threads : {1u, 2u, 8u}) {
    BuildOptions bo;
    bo.threads = threads;
    auto cad = build_cad(phi, o, d, bo);
    REQUIRE(cad.status == Status::Fail);
    REQUIRE(cad.failure.has_value());
    CHECK(cad.failure->level == 2);
    CHECK(cad.failure->sample[0] == RealAlgebraic(Rational(1)));
    CHECK(cad.failure->sample[1] == RealAlgebraic(Rational(1)));
    const std::string w = cad.failure->to_string(*o);
    if (!first) first = w;
    CHECK(w == *first);
  }
}

TEST_CASE("output does not depend on the thread count") {
  auto e = five_var_example();
  std::string ref;
  for (unsigned threads : {1u, 3u, 8u}) {
    BuildOptions bo;
    bo.threads = threads;
    auto cad = build_cad(e.phi, e.order, e.designation, bo);
    const std::string s = save_cad(cad);
    if (ref.empty()) ref = s;
    CHECK(s == ref);
  }
}
