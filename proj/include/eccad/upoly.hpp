// Dense univariate integer polynomials and Sturm-sequence root isolation.

#ifndef ECCAD_UPOLY_HPP
#define ECCAD_UPOLY_HPP

#include <vector>

#include "eccad/polynomial.hpp"

namespace eccad {

/// Coefficients low to high; no trailing zeros (the zero polynomial is
/// empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  /// den * x - num for a rational num/den.
  static UPoly linear_root(const Rational& r);
  /// Requires p to involve only `var`.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);

  Polynomial to_polynomial(const OrderPtr& order, std::size_t var) const;

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& leading() const { return c_.back(); }

  int sign_at(const Rational& x) const;
  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly primitive() const;  // positive leading coefficient
  Integer content() const;
  /// Sum of absolute values of the coefficients.
  Integer length() const;

  UPoly operator*(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Remainder of a * |lc(b)|^k by b with k large enough to stay over Z;
/// the sign is that of the true remainder over Q.
UPoly signed_remainder(const UPoly& a, const UPoly& b);
/// Exact quotient over Z, throws AlgebraError when inexact.
UPoly divide_exact(const UPoly& a, const UPoly& b);
/// Primitive gcd with positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// 1 + max |a_i / a_n| rounded up; all roots lie strictly inside.
Integer cauchy_bound(const UPoly& p);

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  /// Number of distinct roots in the open interval (a, b); a and b must
  /// not be roots.
  int count(const Rational& a, const Rational& b) const;

 private:
  int variations(const Rational& x) const;
  std::vector<UPoly> seq_;
};

/// Simplest rational (least denominator, then least absolute numerator)
/// strictly between lo and hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace eccad

#endif  // ECCAD_UPOLY_HPP
