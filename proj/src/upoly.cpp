#include "eccad/upoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace eccad {

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::linear_root(const Rational& r) {
  return UPoly({-r.get_num(), r.get_den()});
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Integer> c(p.degree(var) + 1);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (i != var && t.exps[i] != 0)
        throw AlgebraError("UPoly: polynomial is not univariate in " +
                           p.order()->name(var));
    c[t.exps[var]] += t.coef;
  }
  return UPoly(std::move(c));
}

Polynomial UPoly::to_polynomial(const OrderPtr& order, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Exponents e(order->size(), 0);
    e[var] = static_cast<std::uint32_t>(i);
    terms.push_back({e, c_[i]});
  }
  return Polynomial::from_terms(order, std::move(terms));
}

int UPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // sum a_i n^i d^(deg-i), same sign as p(n/d) since d > 0
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = c_.back();
  for (int i = degree() - 1; i >= 0; --i) {
    acc *= n;
    Integer t = c_[i];
    if (d != 1) {
      Integer dp;
      mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), degree() - i);
      t *= dp;
    }
    acc += t;
  }
  return sgn(acc);
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + Rational(c_[i]);
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Integer(i);
  return UPoly(std::move(d));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> r(c_);
  for (auto& a : r) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return UPoly(std::move(r));
}

Integer UPoly::length() const {
  Integer s = 0;
  for (const auto& a : c_) s += abs(a);
  return s;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly();
  std::vector<Integer> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  auto order = make_order({var});
  return to_polynomial(order, 0).to_string();
}

UPoly signed_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw AlgebraError("remainder by zero");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer lb = abs(b.leading());
  const int sb = sgn(b.leading());
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    Integer q = r.back();
    if (sb < 0) q = -q;
    // r := |lb| * r - q * x^(dr-db) * b, which keeps the sign of r mod b
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[i + dr - db] -= q * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UPoly(std::move(r));
}

UPoly divide_exact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  if (a.is_zero()) return UPoly();
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) throw AlgebraError("inexact univariate division");
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
      throw AlgebraError("inexact univariate division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (int i = 0; i <= db; ++i) r[k + i] -= c * bc[i];
    q[k] = c;
  }
  for (const auto& x : r)
    if (x != 0) throw AlgebraError("inexact univariate division");
  return UPoly(std::move(q));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  UPoly p = a.primitive(), q = b.primitive();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    UPoly r = signed_remainder(p, q);
    p = std::move(q);
    q = r.primitive();
  }
  return p.primitive();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly({Integer(1)});
  UPoly g = gcd(p, p.derivative());
  return divide_exact(p.primitive(), g);
}

Integer cauchy_bound(const UPoly& p) {
  if (p.degree() <= 0) return 1;
  const Integer lc = abs(p.leading());
  Integer best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), Integer(abs(p.coeffs()[i])).get_mpz_t(),
               lc.get_mpz_t());
    best = std::max(best, q);
  }
  return best + 1;
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw AlgebraError("Sturm sequence of zero");
  seq_.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(d);
  for (;;) {
    const UPoly& a = seq_[seq_.size() - 2];
    const UPoly& b = seq_.back();
    UPoly r = signed_remainder(a, b);
    if (r.is_zero()) break;
    // -rem with a positive scale
    Integer g = r.content();
    std::vector<Integer> c = r.coeffs();
    for (auto& x : c) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      x = -x;
    }
    seq_.push_back(UPoly(std::move(c)));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Simplest rational in (lo, hi) with 0 <= lo, hi possibly infinite.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  Integer fl = floor_of(lo);
  Rational next(fl + 1);
  if (!hi || next < *hi) return next;
  // lo and hi share the integer part fl: x = fl + 1 / y
  Rational ylo = 1 / (*hi - fl);
  std::optional<Rational> yhi;
  if (lo != fl) yhi = 1 / (lo - fl);
  Rational y = simplest_nonneg(ylo, yhi);
  return Rational(fl) + 1 / y;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw AlgebraError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_between(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

}  // namespace eccad
