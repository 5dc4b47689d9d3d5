// Sparse multivariate polynomials over the integers.
//
// Variables are addressed by their position in a VariableOrder, smallest
// first, so x_1 is index 0.  Terms are kept in a canonical graded
// lexicographic order (total degree first, ties broken by comparing
// exponents from the greatest variable downwards), largest term first.

#ifndef ECCAD_POLYNOMIAL_HPP
#define ECCAD_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eccad {

using Integer = mpz_class;
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariableOrder {
 public:
  /// `names` is smallest first; must be nonempty and duplicate free.
  explicit VariableOrder(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableOrder& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
};

using OrderPtr = std::shared_ptr<const VariableOrder>;

OrderPtr make_order(std::vector<std::string> names);
/// Parses "v,u,x,y,z" (smallest first).
OrderPtr parse_order(std::string_view text);

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  Integer coef;
};

/// Canonical monomial comparison; negative when a precedes b in ascending
/// order.
int compare_monomials(const Exponents& a, const Exponents& b);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(OrderPtr order);
  Polynomial(OrderPtr order, const Integer& c);

  static Polynomial variable(OrderPtr order, std::size_t var,
                             std::uint32_t power = 1);
  /// Merges duplicate monomials, drops zeros and sorts canonically.
  static Polynomial from_terms(OrderPtr order, std::vector<Term> terms);

  const OrderPtr& order() const { return order_; }
  std::size_t nvars() const { return order_ ? order_->size() : 0; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Integer constant_value() const;

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t total_degree() const;
  /// Sum over terms of the term's total degree.
  std::uint64_t sum_of_total_degrees() const;
  /// Greatest variable with positive degree; nullopt for constants.
  std::optional<std::size_t> mvar() const;
  bool depends_on(std::size_t var) const { return degree(var) > 0; }

  /// Coefficient of the canonically largest term.
  const Integer& leading_coefficient() const;
  int sign_of_leading_coefficient() const;

  /// Coefficients in `var`, index = power of var.  Empty for zero.
  std::vector<Polynomial> coefficients(std::size_t var) const;
  static Polynomial from_coefficients(OrderPtr order, std::size_t var,
                                      std::span<const Polynomial> coeffs);
  Polynomial leading_coefficient_in(std::size_t var) const;

  Polynomial derivative(std::size_t var) const;
  Integer integer_content() const;
  /// Divides by the positive integer content.
  Polynomial integer_primitive() const;
  /// Negates if needed so the canonical leading coefficient is positive.
  Polynomial sign_normalized() const;

  /// Substitutes var := num/den and multiplies through by den^deg(var).
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// Re-expresses the polynomial over `wider`, whose first nvars() names
  /// must coincide with this order.
  Polynomial embed(OrderPtr wider) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& b) {
    return a *= b;
  }
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  OrderPtr order_;
  std::vector<Term> terms_;  // descending canonical order
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Deterministic ordering for polynomial sets: (mvar, degree in mvar,
/// canonical term sequence).
bool poly_less(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b, nullopt when b does not divide a over Z.
std::optional<Polynomial> divide_exact(const Polynomial& a,
                                       const Polynomial& b);
/// As divide_exact but throws AlgebraError when inexact.
Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `x - y + z^2`, `2x^2*y`, `(x+1)^3` ... over `order`.
Polynomial parse_polynomial(std::string_view text, const OrderPtr& order);

}  // namespace eccad

#endif  // ECCAD_POLYNOMIAL_HPP
