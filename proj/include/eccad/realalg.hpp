// Real algebraic numbers, sample points and exact sign determination.
//
// An irrational number is stored as a squarefree integer polynomial with no
// rational roots together with an open isolating interval whose endpoints
// have opposite signs.  Refinement state is shared between copies and is
// guarded by a mutex, so numbers can be read from several threads.

#ifndef ECCAD_REALALG_HPP
#define ECCAD_REALALG_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eccad/polynomial.hpp"
#include "eccad/upoly.hpp"

namespace eccad {

class AlgebraicDegeneracy : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  RealAlgebraic(const Rational& value);  // NOLINT: implicit on purpose
  /// `defpoly` must be squarefree without rational roots and have exactly
  /// one root in (lo, hi) with a sign change across it.
  static RealAlgebraic from_root(UPoly defpoly, Rational lo, Rational hi);

  bool is_rational() const { return !state_; }
  const Rational& rational() const;
  /// den*x - num for rationals.
  UPoly defpoly() const;
  int degree() const;

  struct Interval {
    Rational lo, hi;
  };
  /// Current isolating interval; degenerate [v, v] for rationals.
  Interval interval() const;
  /// Shrinks the interval to width at most `width`.
  void refine_to(const Rational& width) const;
  /// Bisects once.
  void bisect() const;

  /// floor(a * 2^k) and ceil(a * 2^k), exact.
  Integer floor_scaled(unsigned k = 0) const;
  Integer ceil_scaled(unsigned k = 0) const;
  /// Dyadic isolating interval (m/2^k, (m+1)/2^k) with the least k; depends
  /// only on the value, not on the refinement history.
  Interval canonical_interval() const;

  double approx() const;
  std::string to_string() const;

 private:
  struct State;
  Rational value_;
  std::shared_ptr<State> state_;
};

/// -1, 0, 1.
int compare(const RealAlgebraic& a, const RealAlgebraic& b);
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b) < 0;
}
inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b) == 0;
}

/// Distinct real roots of a nonzero polynomial, ascending.  Rational roots
/// come back as rationals.
std::vector<RealAlgebraic> real_roots(const UPoly& p);

/// Coordinates for the first size() variables of an order.
using SamplePoint = std::vector<RealAlgebraic>;

/// Exact sign of g at the point.  g may only involve variables with index
/// below point.size().
int sign_at(const Polynomial& g, std::span<const RealAlgebraic> point);

struct RootsResult {
  bool nullified = false;
  std::vector<RealAlgebraic> roots;  // distinct, ascending
};

/// Real roots of f(point, x_k) in x_k where k = point.size(); f may only
/// involve variables up to k.  Reports nullification when f(point, x_k)
/// vanishes identically.
RootsResult roots_at(const Polynomial& f, std::span<const RealAlgebraic> point);

struct TaggedRoot {
  RealAlgebraic root;
  std::vector<std::size_t> origins;  // indices into the input list
};

/// Merged, strictly increasing roots of {p(point, x_k) : p in polys}.
/// Throws NullifiedError naming the first nullified polynomial.
std::vector<TaggedRoot> substitute_roots(const std::vector<Polynomial>& polys,
                                         std::span<const RealAlgebraic> point);

class NullifiedError : public AlgebraError {
 public:
  NullifiedError(std::size_t index, const std::string& msg)
      : AlgebraError(msg), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace eccad

#endif  // ECCAD_REALALG_HPP
