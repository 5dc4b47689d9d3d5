// Quantifier-free formulas over polynomial sign conditions.
//
// Grammar (loosest binding first):
//   formula := conj ( "\/" conj )*
//   conj    := unary ( "/\" unary )*
//   unary   := "~" unary | "(" formula ")" | "true" | "false" | atom
//   atom    := poly REL poly          REL in  =  /=  <  <=  >  >=
// Atoms are stored as (lhs - rhs) REL 0.

#ifndef ECCAD_FORMULA_HPP
#define ECCAD_FORMULA_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eccad/polynomial.hpp"
#include "eccad/realalg.hpp"

namespace eccad {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view relation_symbol(Relation r);
/// Truth of (value with sign s) REL 0.
bool relation_holds(Relation r, int sign);

struct Formula {
  enum class Kind { True, False, Atom, Not, And, Or };

  Kind kind = Kind::True;
  Polynomial poly;  // Atom only
  Relation rel = Relation::Eq;
  std::vector<Formula> children;

  static Formula atom(Polynomial p, Relation r);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula constant(bool value);

  std::string to_string() const;
};

Formula parse_formula(std::string_view text, const OrderPtr& order);

/// Exact truth at a full sample point (one coordinate per variable).
bool evaluate(const Formula& f, std::span<const RealAlgebraic> point);

/// Distinct nonconstant atom polynomials, sign normalized and sorted.
std::vector<Polynomial> atom_polynomials(const Formula& f);

/// Polynomials of "=" atoms that are top-level conjuncts.
std::vector<Polynomial> explicit_ecs(const Formula& f);

}  // namespace eccad

#endif  // ECCAD_FORMULA_HPP
