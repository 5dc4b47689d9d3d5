#include "eccad/bounds.hpp"

#include <stdexcept>

namespace eccad {

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// 2^e for a possibly negative exponent.
Rational pow2_signed(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

unsigned long two_to(unsigned k) {
  if (k >= 63) throw std::invalid_argument("bound exponent too large");
  return 1UL << k;
}

void check(const BoundParams& p) {
  if (p.n == 0 || p.m == 0 || p.d == 0)
    throw std::invalid_argument("n, m and d must be positive");
  if (p.l > std::min(p.m, p.n))
    throw std::invalid_argument("l must not exceed min(m, n)");
}

// Cells over R^{i} when lifting with every projection polynomial.
Integer full_factor(const MDProperty& row) { return 2 * row.m * row.d + 1; }

}  // namespace

MDProperty md_step_P(const MDProperty& p) {
  Integer s = p.m + 1;
  return {Integer(s * s / 2), 2 * p.d * p.d};
}

MDProperty md_step_P_table(const MDProperty& p, bool first) {
  return {first ? Integer(2 * p.m * p.m) : Integer(p.m * p.m), 2 * p.d * p.d};
}

MDProperty md_step_ECstar(const MDProperty& p) { return {2 * p.m, 2 * p.d * p.d}; }

MDProperty table_P_row(const MDProperty& top, unsigned r) {
  if (r == 0) return top;
  return {pow2(two_to(r - 1)) * ipow(top.m, two_to(r)),
          pow2(two_to(r) - 1) * ipow(top.d, two_to(r))};
}

MDProperty table_EC_row(const MDProperty& top, unsigned l, unsigned j) {
  if (j <= l) return {pow2(j) * top.m, pow2(two_to(j) - 1) * ipow(top.d, two_to(j))};
  const unsigned r = j - l;
  return {pow2(two_to(r) * l) * ipow(top.m, two_to(r)),
          pow2(two_to(l + r) - 1) * ipow(top.d, two_to(l + r))};
}

std::string bound_mode_name(BoundMode m) {
  switch (m) {
    case BoundMode::PFull: return "p-full";
    case BoundMode::ECProjection: return "ec-projection";
    case BoundMode::ECFull: return "ec-full";
  }
  return "?";
}

BoundMode parse_bound_mode(const std::string& s) {
  if (s == "p-full") return BoundMode::PFull;
  if (s == "ec-projection") return BoundMode::ECProjection;
  if (s == "ec-full") return BoundMode::ECFull;
  throw std::invalid_argument("unknown bound mode '" + s + "'");
}

Integer cell_bound(const BoundParams& p, BoundMode mode) {
  check(p);
  const MDProperty top{p.m, p.d};
  const unsigned n = p.n;
  if (p.l == 0 || mode == BoundMode::PFull) {
    Integer total = 1;
    for (unsigned r = 0; r < n; ++r) total *= full_factor(table_P_row(top, r));
    return total;
  }
  // Rows exist for 1..n variables, i.e. j = n - i in [0, n-1].
  const unsigned l = std::min(p.l, n - 1);
  auto row = [&](unsigned i) { return table_EC_row(top, l, n - i); };
  if (mode == BoundMode::ECProjection) {
    Integer total = 1;
    for (unsigned i = 1; i <= n; ++i) total *= full_factor(row(i));
    return total;
  }
  // Unrestricted lifting up to R^{n-l-1}.
  Integer dagger = 1;
  for (unsigned i = 1; i + l + 1 <= n; ++i) dagger *= full_factor(row(i));
  // Lift to R^{n-l} over every cell with respect to the EC only.
  Integer cells = (2 * row(n - l).d + 1) * dagger;
  Integer sections = row(n - l).d * dagger;
  // Later lifts: sections lifted by the EC, sectors extended trivially.
  for (unsigned i = n - l + 1; i <= n; ++i) {
    const Integer di = row(i).d;
    cells = (2 * di + 1) * sections + (cells - sections);
    sections = di * sections;
  }
  return cells;
}

Integer dominant_P(unsigned n, unsigned m, unsigned d) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const unsigned long e = two_to(n) - 1;
  return ipow(Integer(2 * d), e) * ipow(Integer(m), e) * pow2(two_to(n - 1) - 1);
}

Rational dominant_EC_projection(unsigned n, unsigned m, unsigned d, unsigned l) {
  if (n == 0 || l > n) throw std::invalid_argument("need 0 < n and l <= n");
  const long L = l;
  const Integer base = ipow(Integer(2 * d), two_to(n) - 1) *
                       ipow(Integer(m), two_to(n - l) + l - 1);
  return Rational(base) * pow2_signed(L * static_cast<long>(two_to(n - l)) +
                                      L * (L - 3) / 2);
}

Rational dominant_EC_full(unsigned n, unsigned m, unsigned d, unsigned l) {
  if (n == 0 || l > n) throw std::invalid_argument("need 0 < n and l <= n");
  const long L = l;
  const long me = static_cast<long>(two_to(n - l)) - 2;
  Rational mpart = me >= 0 ? Rational(ipow(Integer(m), me))
                           : Rational(1) / Rational(ipow(Integer(m), -me));
  const Integer base = ipow(Integer(2 * d), two_to(n) - 1);
  return Rational(base) * mpart * pow2_signed(L * static_cast<long>(two_to(n - l)) - 3 * L);
}

}  // namespace eccad
