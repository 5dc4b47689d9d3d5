// (m,d)-property growth under projection and the cell-count bounds built on
// it.  All values are exact big integers or rationals.

#ifndef ECCAD_BOUNDS_HPP
#define ECCAD_BOUNDS_HPP

#include <string>

#include "eccad/polynomial.hpp"

namespace eccad {

/// A set that splits into m subsets of combined degree at most d.
struct MDProperty {
  Integer m;
  Integer d;
  bool operator==(const MDProperty& o) const { return m == o.m && d == o.d; }
};

/// Through P(A) u cont(A): (floor((m+1)^2 / 2), 2d^2).
MDProperty md_step_P(const MDProperty& p);

/// The looser table form: (2m^2, 2d^2) on the first step, (m^2, 2d^2) after.
MDProperty md_step_P_table(const MDProperty& p, bool first);

/// Through cont(A) u P_E*(A) with E of property (1,d): (2m, 2d^2).
MDProperty md_step_ECstar(const MDProperty& p);

/// Row with n - r variables when only P is used.
MDProperty table_P_row(const MDProperty& top, unsigned r);

/// Row with n - j variables after l reduced projections followed by P.
MDProperty table_EC_row(const MDProperty& top, unsigned l, unsigned j);

struct BoundParams {
  unsigned n = 1;  // variables
  unsigned m = 1;  // polynomials
  unsigned d = 1;  // degree
  unsigned l = 0;  // equational constraints in the top variables
};

enum class BoundMode { PFull, ECProjection, ECFull };

std::string bound_mode_name(BoundMode m);  // "p-full", "ec-projection", "ec-full"
BoundMode parse_bound_mode(const std::string& s);

/// Full product bound (with the +1 terms).  Throws std::invalid_argument on
/// l > min(m, n) or zero n, m, d.  l = 0 gives the P-full bound in every mode.
Integer cell_bound(const BoundParams& p, BoundMode mode);

/// (2d)^(2^n-1) m^(2^n-1) 2^(2^(n-1)-1)
Integer dominant_P(unsigned n, unsigned m, unsigned d);

/// (2d)^(2^n-1) m^(2^(n-l)+l-1) 2^(l 2^(n-l) + l(l-3)/2)
Rational dominant_EC_projection(unsigned n, unsigned m, unsigned d, unsigned l);

/// (2d)^(2^n-1) m^(2^(n-l)-2) 2^(l 2^(n-l) - 3l)
Rational dominant_EC_full(unsigned n, unsigned m, unsigned d, unsigned l);

}  // namespace eccad

#endif  // ECCAD_BOUNDS_HPP
