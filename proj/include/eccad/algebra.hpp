// Algebraic subroutines on Polynomial: contents, gcds, resultants,
// discriminants and squarefree bases.  All functions are pure.

#ifndef ECCAD_ALGEBRA_HPP
#define ECCAD_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eccad/polynomial.hpp"

namespace eccad {

/// A polynomial seen as univariate in its main variable.
struct MvarView {
  Polynomial poly;
  std::optional<std::size_t> mvar;
  std::uint32_t degree = 0;
  std::vector<Polynomial> coeffs;  // coeffs[i] multiplies mvar^i
};

MvarView mvar_view(const Polynomial& p);

struct ContentPrim {
  Polynomial content;
  Polynomial primitive;
};

/// Content and primitive part with respect to the mvar of p.  The content
/// carries the sign so the primitive part has positive canonical leading
/// coefficient.  Constants give (p, 1).
ContentPrim content_prim(const Polynomial& p);
/// Same, with respect to an explicit variable.
ContentPrim content_prim_in(const Polynomial& p, std::size_t var);

/// Sign normalized gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b, in var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var);

/// Resultant in var; both inputs need positive degree in var.  Dispatches
/// to the Sylvester determinant for small degrees and to the subresultant
/// PRS otherwise.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var);
Polynomial resultant_subresultant(const Polynomial& p, const Polynomial& q,
                                  std::size_t var);
Polynomial resultant_sylvester(const Polynomial& p, const Polynomial& q,
                               std::size_t var);
/// Determinant by fraction-free (Bareiss) elimination.
Polynomial determinant(std::vector<std::vector<Polynomial>> m,
                       const OrderPtr& order);

/// (-1)^(d(d-1)/2) res(p, p') / ldcf(p); 1 when p is linear in var.
Polynomial discriminant(const Polynomial& p, std::size_t var);

/// Squarefree part, integer content removed, sign normalized.
Polynomial squarefree_part(const Polynomial& p);

/// Squarefree, primitive and sign normalized; 1 for constants.
Polynomial normal_form(const Polynomial& p);

/// Finest squarefree basis by gcd splitting.  Inputs must be nonzero and
/// share one mvar; only primitive parts are used.  Output is sorted with
/// poly_less.
std::vector<Polynomial> squarefree_basis(const std::vector<Polynomial>& polys);

/// Substitutes rationals for a downward-closed prefix of variables,
/// clearing denominators by a positive factor.
Polynomial evaluate(const Polynomial& p,
                    const std::map<std::string, Rational>& assignment);

/// Sorts with poly_less and removes duplicates up to sign.
void canonicalize_set(std::vector<Polynomial>& polys);

}  // namespace eccad

#endif  // ECCAD_ALGEBRA_HPP
