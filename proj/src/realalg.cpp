#include "eccad/realalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "eccad/algebra.hpp"

namespace eccad {

struct RealAlgebraic::State {
  UPoly poly;
  Rational lo, hi;
  int sign_lo = 0;
  mutable std::mutex mu;

  void bisect_locked() {
    Rational mid = (lo + hi) / 2;
    const int s = poly.sign_at(mid);
    if (s == 0) throw AlgebraError("isolating polynomial has a rational root");
    if (s == sign_lo) lo = mid; else hi = mid;
  }
};

RealAlgebraic::RealAlgebraic(const Rational& value) : value_(value) {
  value_.canonicalize();
}

RealAlgebraic RealAlgebraic::from_root(UPoly defpoly, Rational lo, Rational hi) {
  RealAlgebraic r;
  auto st = std::make_shared<State>();
  st->sign_lo = defpoly.sign_at(lo);
  if (st->sign_lo == 0 || defpoly.sign_at(hi) != -st->sign_lo)
    throw AlgebraError("from_root: interval does not isolate a sign change");
  st->poly = std::move(defpoly);
  st->lo = std::move(lo);
  st->hi = std::move(hi);
  r.state_ = std::move(st);
  return r;
}

const Rational& RealAlgebraic::rational() const {
  if (state_) throw AlgebraError("rational(): number is irrational");
  return value_;
}

UPoly RealAlgebraic::defpoly() const {
  if (!state_) return UPoly::linear_root(value_);
  return state_->poly;
}

int RealAlgebraic::degree() const { return state_ ? state_->poly.degree() : 1; }

RealAlgebraic::Interval RealAlgebraic::interval() const {
  if (!state_) return {value_, value_};
  std::lock_guard<std::mutex> lock(state_->mu);
  return {state_->lo, state_->hi};
}

void RealAlgebraic::refine_to(const Rational& width) const {
  if (!state_) return;
  std::lock_guard<std::mutex> lock(state_->mu);
  while (state_->hi - state_->lo > width) state_->bisect_locked();
}

void RealAlgebraic::bisect() const {
  if (!state_) return;
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->bisect_locked();
}

namespace {

Integer floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rational scaled(const Rational& q, unsigned k) {
  Rational r = q;
  mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), k);
  return r;
}

}  // namespace

Integer RealAlgebraic::floor_scaled(unsigned k) const {
  if (!state_) return floor_q(scaled(value_, k));
  for (;;) {
    auto iv = interval();
    const Rational lo = scaled(iv.lo, k), hi = scaled(iv.hi, k);
    const Integer fl = floor_q(lo), fh = floor_q(hi);
    if (fl == fh) return fl;
    if (fh == fl + 1 && hi == Rational(fh)) return fl;
    bisect();
  }
}

Integer RealAlgebraic::ceil_scaled(unsigned k) const {
  if (!state_) {
    Rational v = scaled(value_, k);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return c;
  }
  // irrational: a * 2^k is never an integer
  return floor_scaled(k) + 1;
}

RealAlgebraic::Interval RealAlgebraic::canonical_interval() const {
  if (!state_) return {value_, value_};
  SturmSequence sturm(state_->poly);
  for (unsigned k = 0;; ++k) {
    const Integer m = floor_scaled(k);
    Rational lo(m), hi(m + 1);
    mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), k);
    mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), k);
    if (sturm.count(lo, hi) == 1) return {lo, hi};
  }
}

double RealAlgebraic::approx() const {
  if (!state_) return value_.get_d();
  refine_to(Rational(1, Integer(1) << 60));
  auto iv = interval();
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

std::string RealAlgebraic::to_string() const {
  if (!state_) return value_.get_str();
  auto iv = interval();
  std::ostringstream os;
  os << "root of " << state_->poly.to_string() << " in (" << iv.lo.get_str()
     << ", " << iv.hi.get_str() << ")";
  return os.str();
}

namespace {

int cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// r against an irrational number.
int cmp_rat_alg(const Rational& r, const RealAlgebraic& b) {
  auto iv = b.interval();
  if (r <= iv.lo) return -1;
  if (r >= iv.hi) return 1;
  const UPoly p = b.defpoly();
  const int s = p.sign_at(r);
  const int slo = p.sign_at(iv.lo);
  return s == slo ? -1 : 1;
}

}  // namespace

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational())
    return cmp_rational(a.rational(), b.rational());
  if (a.is_rational()) return cmp_rat_alg(a.rational(), b);
  if (b.is_rational()) return -cmp_rat_alg(b.rational(), a);

  std::optional<UPoly> g;
  for (;;) {
    auto ia = a.interval(), ib = b.interval();
    if (ia.hi <= ib.lo) return -1;
    if (ib.hi <= ia.lo) return 1;
    if (!g) g = gcd(a.defpoly(), b.defpoly());
    if (g->degree() > 0) {
      Rational lo = std::max(ia.lo, ib.lo), hi = std::min(ia.hi, ib.hi);
      if (SturmSequence(*g).count(lo, hi) > 0) return 0;
    }
    a.bisect();
    b.bisect();
  }
}

std::vector<RealAlgebraic> real_roots(const UPoly& input) {
  if (input.is_zero()) throw AlgebraError("real_roots of the zero polynomial");
  UPoly p = squarefree_part(input);
  std::vector<Rational> rational_roots;
  struct Iv {
    Rational lo, hi;
  };
  std::vector<Iv> isolated;

  bool restart = true;
  while (restart) {
    restart = false;
    isolated.clear();
    if (p.degree() <= 0) break;
    SturmSequence sturm(p);
    const Rational bound(cauchy_bound(p));
    std::vector<Iv> stack{{-bound, bound}};
    while (!stack.empty() && !restart) {
      Iv iv = stack.back();
      stack.pop_back();
      const int n = sturm.count(iv.lo, iv.hi);
      if (n == 0) continue;
      if (n == 1) {
        isolated.push_back(iv);
        continue;
      }
      Rational mid = (iv.lo + iv.hi) / 2;
      if (p.sign_at(mid) == 0) {
        rational_roots.push_back(mid);
        p = divide_exact(p, UPoly::linear_root(mid));
        restart = true;
        break;
      }
      stack.push_back({mid, iv.hi});
      stack.push_back({iv.lo, mid});
    }
  }

  // Detect rational roots among the isolated ones: a root num/den has
  // den | lc, and two such rationals are at least 1/lc^2 apart.
  std::vector<Iv> irrational;
  if (p.degree() > 0) {
    const Integer lc = abs(p.leading());
    const Rational width(1, lc * lc);
    for (Iv iv : isolated) {
      int slo = p.sign_at(iv.lo);
      bool found = false;
      while (iv.hi - iv.lo >= width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = p.sign_at(mid);
        if (s == 0) {
          rational_roots.push_back(mid);
          found = true;
          break;
        }
        if (s == slo) iv.lo = mid; else iv.hi = mid;
      }
      if (!found) {
        Rational s = simplest_between(iv.lo, iv.hi);
        if (p.sign_at(s) == 0) {
          rational_roots.push_back(s);
          found = true;
        }
      }
      if (!found) irrational.push_back(iv);
    }
  }
  UPoly def = p;
  for (const auto& r : rational_roots)
    if (def.degree() > 0 && def.sign_at(r) == 0)
      def = divide_exact(def, UPoly::linear_root(r));

  std::vector<RealAlgebraic> out;
  for (const auto& r : rational_roots) out.emplace_back(r);
  for (const auto& iv : irrational)
    out.push_back(RealAlgebraic::from_root(def.primitive(), iv.lo, iv.hi));
  std::sort(out.begin(), out.end(),
            [](const RealAlgebraic& a, const RealAlgebraic& b) {
              return compare(a, b) < 0;
            });
  return out;
}

namespace {

struct QInterval {
  Rational lo, hi;
};

QInterval imul(const QInterval& a, const QInterval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

QInterval ipow(const QInterval& a, std::uint32_t e) {
  if (e == 0) return {1, 1};
  Rational plo, phi;
  auto pw = [](const Rational& x, std::uint32_t k) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
    return r;
  };
  plo = pw(a.lo, e);
  phi = pw(a.hi, e);
  if (e % 2 == 1) return {plo, phi};
  if (a.lo >= 0) return {plo, phi};
  if (a.hi <= 0) return {phi, plo};
  return {0, std::max(plo, phi)};
}

// Enclosure of h over the box (only indices in `vars` are non-degenerate;
// h involves no other variables).
QInterval enclose(const Polynomial& h, const std::vector<std::size_t>& vars,
                  const std::vector<QInterval>& box) {
  QInterval acc{0, 0};
  for (const auto& t : h.terms()) {
    QInterval term{Rational(t.coef), Rational(t.coef)};
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const std::uint32_t e = t.exps[vars[k]];
      if (e) term = imul(term, ipow(box[k], e));
    }
    acc.lo += term.lo;
    acc.hi += term.hi;
  }
  return acc;
}

std::size_t bits_of(const Integer& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Bits b such that a nonzero value of h at the point has |value| > 2^-b.
// Liouville: |h(a)| >= L(h)^(1-D) * prod M(a_i)^(-D deg_i(h) / d_i), with
// D <= prod deg m_i, D / d_i <= prod_{l != i} deg m_l and M(a_i) <= L(m_i).
std::size_t zero_bits(const Polynomial& h, const std::vector<std::size_t>& vars,
                      std::span<const RealAlgebraic> point) {
  std::vector<UPoly> defs;
  std::size_t dmax = 1;
  for (auto v : vars) {
    defs.push_back(point[v].defpoly());
    dmax *= static_cast<std::size_t>(defs.back().degree());
  }
  Integer lh = 0;
  for (const auto& t : h.terms()) lh += abs(t.coef);
  std::size_t bits = (dmax - 1) * bits_of(lh);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::size_t others = dmax / static_cast<std::size_t>(defs[i].degree());
    bits += h.degree(vars[i]) * others * bits_of(defs[i].length());
  }
  return bits + 2;
}

Polynomial substitute_rationals(const Polynomial& g,
                                std::span<const RealAlgebraic> point,
                                std::vector<std::size_t>& irrational) {
  Polynomial h = g;
  irrational.clear();
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!h.depends_on(i)) continue;
    if (point[i].is_rational())
      h = h.substitute(i, point[i].rational());
    else
      irrational.push_back(i);
  }
  return h;
}

bool root_of(const UPoly& g, const RealAlgebraic& a) {
  if (g.degree() <= 0) return false;
  auto iv = a.interval();
  return SturmSequence(g).count(iv.lo, iv.hi) > 0;
}

int sign_irrational(const Polynomial& h, const std::vector<std::size_t>& irr,
                    std::span<const RealAlgebraic> point) {
  for (std::size_t v = h.mvar().value_or(0) + 1; v-- > 0;)
    if (h.depends_on(v) &&
        std::find(irr.begin(), irr.end(), v) == irr.end())
      throw AlgebraError("sign_at: polynomial involves an unassigned variable");
  bool known_nonzero = false;
  if (irr.size() == 1) {
    const std::size_t j = irr[0];
    UPoly u = UPoly::from_polynomial(h, j);
    UPoly g = gcd(u, point[j].defpoly());
    if (root_of(g, point[j])) return 0;
    known_nonzero = true;
  }
  std::optional<Rational> zero_radius;
  unsigned prec = 8;
  for (;;) {
    const Rational width(1, Integer(1) << prec);
    std::vector<QInterval> box;
    for (auto v : irr) {
      point[v].refine_to(width);
      auto iv = point[v].interval();
      box.push_back({iv.lo, iv.hi});
    }
    QInterval e = enclose(h, irr, box);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    if (!known_nonzero) {
      if (!zero_radius)
        zero_radius = Rational(1, Integer(1) << zero_bits(h, irr, point));
      if (e.lo > -*zero_radius && e.hi < *zero_radius) return 0;
    }
    prec = prec < 64 ? prec * 2 : prec + prec / 2;
  }
}

}  // namespace

int sign_at(const Polynomial& g, std::span<const RealAlgebraic> point) {
  std::vector<std::size_t> irr;
  Polynomial h = substitute_rationals(g, point, irr);
  if (h.is_constant()) return sgn(h.constant_value());
  if (auto mv = h.mvar(); mv && *mv >= point.size())
    throw AlgebraError("sign_at: polynomial involves an unassigned variable");
  return sign_irrational(h, irr, point);
}

RootsResult roots_at(const Polynomial& f, std::span<const RealAlgebraic> point) {
  const std::size_t k = point.size();
  if (auto mv = f.mvar(); mv && *mv > k)
    throw AlgebraError("roots_at: polynomial involves a variable above the target");
  RootsResult out;
  if (f.is_zero()) {
    out.nullified = true;
    return out;
  }
  std::vector<std::size_t> irr;
  Polynomial h = substitute_rationals(f, point, irr);
  if (!h.depends_on(k)) {
    // constant in x_k; nullified iff it vanishes at the point
    out.nullified = sign_at(h, point) == 0;
    return out;
  }
  if (irr.empty()) {
    out.roots = real_roots(UPoly::from_polynomial(h, k));
    return out;
  }
  bool all_zero = true;
  for (const auto& c : h.coefficients(k)) {
    if (c.is_zero()) continue;
    if (sign_at(c, point) != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    out.nullified = true;
    return out;
  }

  // Norm: eliminate the irrational coordinates with their defining
  // polynomials.  Factors of the running polynomial that only involve x_j
  // are removed first; they cannot vanish at the true conjugate.
  const OrderPtr& order = h.order();
  Polynomial norm = h;
  for (auto j : irr) {
    if (!norm.depends_on(j)) continue;
    Polynomial m = point[j].defpoly().to_polynomial(order, j);
    for (;;) {
      Polynomial g = gcd(norm, m);
      if (!g.depends_on(j)) break;
      while (auto q = divide_exact(norm, g)) norm = *q;
    }
    if (!norm.depends_on(j)) continue;
    norm = resultant(m, norm, j);
    if (norm.is_zero())
      throw AlgebraicDegeneracy("norm vanished identically");
  }
  if (!norm.depends_on(k)) return out;  // f(point, x_k) is a nonzero constant
  std::vector<RealAlgebraic> lifted(point.begin(), point.end());
  lifted.emplace_back();
  for (auto& cand : real_roots(UPoly::from_polynomial(norm, k))) {
    lifted.back() = cand;
    if (sign_at(h, lifted) == 0) out.roots.push_back(cand);
  }
  return out;
}

std::vector<TaggedRoot> substitute_roots(const std::vector<Polynomial>& polys,
                                         std::span<const RealAlgebraic> point) {
  std::vector<TaggedRoot> merged;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    RootsResult r = roots_at(polys[i], point);
    if (r.nullified)
      throw NullifiedError(i, "polynomial " + polys[i].to_string() +
                                  " is nullified at the sample");
    for (auto& root : r.roots) {
      auto it = std::lower_bound(
          merged.begin(), merged.end(), root,
          [](const TaggedRoot& t, const RealAlgebraic& a) { return compare(t.root, a) < 0; });
      if (it != merged.end() && compare(it->root, root) == 0)
        it->origins.push_back(i);
      else
        merged.insert(it, TaggedRoot{root, {i}});
    }
  }
  return merged;
}

}  // namespace eccad
