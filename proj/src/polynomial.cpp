#include "eccad/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "parse_util.hpp"

namespace eccad {

VariableOrder::VariableOrder(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("empty variable order");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> VariableOrder::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

OrderPtr make_order(std::vector<std::string> names) {
  return std::make_shared<const VariableOrder>(std::move(names));
}

OrderPtr parse_order(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) names.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) names.push_back(std::move(cur));
  return make_order(std::move(names));
}

namespace {

std::uint32_t exps_total(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

struct MonomialLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_monomials(a, b) < 0;
  }
};

}  // namespace

int compare_monomials(const Exponents& a, const Exponents& b) {
  const auto da = exps_total(a), db = exps_total(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Polynomial::Polynomial(OrderPtr order) : order_(std::move(order)) {}

Polynomial::Polynomial(OrderPtr order, const Integer& c)
    : order_(std::move(order)) {
  if (c != 0) terms_.push_back({Exponents(nvars(), 0), c});
}

Polynomial Polynomial::variable(OrderPtr order, std::size_t var,
                                std::uint32_t power) {
  Polynomial p(std::move(order));
  Exponents e(p.nvars(), 0);
  e.at(var) = power;
  p.terms_.push_back({std::move(e), 1});
  return p;
}

Polynomial Polynomial::from_terms(OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(order));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.exps, b.exps) > 0;
  });
  for (auto& t : terms) {
    if (t.exps.size() != p.nvars())
      throw std::invalid_argument("exponent vector length mismatch");
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coef += t.coef;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exps_total(terms_[0].exps) == 0);
}

Integer Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw AlgebraError("polynomial is not constant");
  return terms_[0].coef;
}

std::uint32_t Polynomial::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : exps_total(terms_.front().exps);
}

std::uint64_t Polynomial::sum_of_total_degrees() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s += exps_total(t.exps);
  return s;
}

std::optional<std::size_t> Polynomial::mvar() const {
  for (std::size_t v = nvars(); v-- > 0;)
    if (degree(v) > 0) return v;
  return std::nullopt;
}

const Integer& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw AlgebraError("leading coefficient of zero");
  return terms_.front().coef;
}

int Polynomial::sign_of_leading_coefficient() const {
  return terms_.empty() ? 0 : sgn(terms_.front().coef);
}

std::vector<Polynomial> Polynomial::coefficients(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(terms_.empty() ? 0 : degree(var) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    u.exps[var] = 0;
    buckets[t.exps[var]].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(order_, std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(OrderPtr order, std::size_t var,
                                         std::span<const Polynomial> coeffs) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& t : coeffs[d].terms()) {
      Term u = t;
      u.exps[var] += static_cast<std::uint32_t>(d);
      terms.push_back(std::move(u));
    }
  }
  return from_terms(std::move(order), std::move(terms));
}

Polynomial Polynomial::leading_coefficient_in(std::size_t var) const {
  if (is_zero()) return *this;
  auto cs = coefficients(var);
  return cs.back();
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term u = t;
    u.coef *= t.exps[var];
    u.exps[var] -= 1;
    terms.push_back(std::move(u));
  }
  return from_terms(order_, std::move(terms));
}

Integer Polynomial::integer_content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::integer_primitive() const {
  Integer g = integer_content();
  if (g == 0 || g == 1) return *this;
  Polynomial p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
  return p;
}

Polynomial Polynomial::sign_normalized() const {
  if (sign_of_leading_coefficient() < 0) return -*this;
  return *this;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  const std::uint32_t d = degree(var);
  if (d == 0) return *this;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  std::vector<Integer> num_pow(d + 1), den_pow(d + 1);
  num_pow[0] = 1;
  den_pow[0] = 1;
  for (std::uint32_t i = 1; i <= d; ++i) {
    num_pow[i] = num_pow[i - 1] * num;
    den_pow[i] = den_pow[i - 1] * den;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    const std::uint32_t e = t.exps[var];
    u.coef *= num_pow[e] * den_pow[d - e];
    u.exps[var] = 0;
    terms.push_back(std::move(u));
  }
  return from_terms(order_, std::move(terms));
}

Polynomial Polynomial::embed(OrderPtr wider) const {
  if (!wider || wider->size() < nvars())
    throw std::invalid_argument("embed: target order too small");
  for (std::size_t i = 0; i < nvars(); ++i)
    if (wider->name(i) != order_->name(i))
      throw std::invalid_argument("embed: orders disagree on prefix");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Term u = t;
    u.exps.resize(wider->size(), 0);
    terms.push_back(std::move(u));
  }
  return from_terms(std::move(wider), std::move(terms));
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (order_ && other.order_ && order_ != other.order_ &&
      !(*order_ == *other.order_))
    throw std::invalid_argument("polynomials over different variable orders");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

namespace {

// Merge of two canonically sorted term lists, `sign` applied to rhs.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare_monomials(a[i].exps, b[j].exps);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (sign < 0) t.coef = -t.coef;
      out.push_back(std::move(t));
    } else {
      Integer s = a[i].coef;
      if (sign > 0) s += b[j].coef; else s -= b[j].coef;
      if (s != 0) out.push_back({a[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  if (!order_) order_ = rhs.order_;
  terms_ = merge_terms(terms_, rhs.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  if (!order_) order_ = rhs.order_;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  OrderPtr order = a.order_ ? a.order_ : b.order_;
  if (a.is_zero() || b.is_zero()) return Polynomial(order);
  std::map<Exponents, Integer, MonomialLess> acc;
  Exponents e(a.nvars());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exps[i] + t.exps[i];
      auto [it, inserted] = acc.try_emplace(e, 0);
      mpz_addmul(it->second.get_mpz_t(), s.coef.get_mpz_t(), t.coef.get_mpz_t());
    }
  }
  Polynomial p(order);
  p.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) p.terms_.push_back({it->first, it->second});
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= rhs;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(order_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef != other.terms_[i].coef ||
        terms_[i].exps != other.terms_[i].exps)
      return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coef;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_var = exps_total(t.exps) > 0;
    bool wrote = false;
    if (c != 1 || !has_var) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t v = t.exps.size(); v-- > 0;) {
      if (t.exps[v] == 0) continue;
      if (wrote) os << '*';
      os << order_->name(v);
      if (t.exps[v] > 1) os << '^' << t.exps[v];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  const auto ma = a.mvar(), mb = b.mvar();
  const long ia = ma ? static_cast<long>(*ma) : -1;
  const long ib = mb ? static_cast<long>(*mb) : -1;
  if (ia != ib) return ia < ib;
  if (ma) {
    const auto da = a.degree(*ma), db = b.degree(*mb);
    if (da != db) return da < db;
  }
  const auto ta = a.terms(), tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = compare_monomials(ta[i].exps, tb[i].exps);
    if (c != 0) return c < 0;
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return ta.size() < tb.size();
}

std::optional<Polynomial> divide_exact(const Polynomial& a,
                                       const Polynomial& b) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  OrderPtr order = a.order() ? a.order() : b.order();
  if (a.is_zero()) return Polynomial(order);
  const Term& lt = b.terms().front();
  std::vector<Term> quotient;
  Polynomial rem = a;
  // Leading-term division w.r.t. the graded order; for a single divisor
  // the remainder is zero exactly when b divides a.
  while (!rem.is_zero()) {
    const Term& r = rem.terms().front();
    Term q;
    q.exps.resize(r.exps.size());
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
      if (r.exps[i] < lt.exps[i]) return std::nullopt;
      q.exps[i] = r.exps[i] - lt.exps[i];
    }
    if (!mpz_divisible_p(r.coef.get_mpz_t(), lt.coef.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(q.coef.get_mpz_t(), r.coef.get_mpz_t(), lt.coef.get_mpz_t());
    Polynomial step = Polynomial::from_terms(order, {q}) * b;
    rem -= step;
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(order, std::move(quotient));
}

Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q)
    throw AlgebraError("inexact division: (" + a.to_string() + ") / (" +
                       b.to_string() + ")");
  return std::move(*q);
}

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " at position " + std::to_string(position)),
      position_(position) {}

Polynomial parse_polynomial(std::string_view text, const OrderPtr& order) {
  detail::Cursor cur(text);
  Polynomial p = detail::parse_sum(cur, order);
  cur.skip_ws();
  if (!cur.done()) throw ParseError("unexpected character '" + std::string(1, cur.peek()) + "'", cur.pos);
  return p;
}

}  // namespace eccad
