// Projection operators and the projection phase.
//
// Levels are addressed by variable index (0 = smallest variable).  All
// operator outputs are raw polynomials; constants are dropped and
// duplicates are removed up to sign and squarefree normalisation.

#ifndef ECCAD_PROJECTION_HPP
#define ECCAD_PROJECTION_HPP

#include <string>
#include <vector>

#include "eccad/ecprop.hpp"
#include "eccad/polynomial.hpp"

namespace eccad {

enum class Operator { None, P, PF, PFStar };

std::string operator_name(Operator op);

struct ProjectionOptions {
  /// Use every coefficient instead of stopping at the first nonzero
  /// constant one.
  bool strict_coefficients = false;
  /// Use pairwise resultants of B \ F in the starred operator instead of
  /// discriminants.
  bool star_uses_resultants = false;
};

/// Coefficients from the leading one downwards, stopping after the first
/// nonzero constant (all of them in strict mode).
std::vector<Polynomial> reduced_coefficients(const Polynomial& p, std::size_t var,
                                             bool strict);

std::vector<Polynomial> proj_P(const std::vector<Polynomial>& B, std::size_t var,
                               const ProjectionOptions& opts = {});
std::vector<Polynomial> proj_PF(const std::vector<Polynomial>& B,
                                const std::vector<Polynomial>& F, std::size_t var,
                                const ProjectionOptions& opts = {});
std::vector<Polynomial> proj_PFstar(const std::vector<Polynomial>& B,
                                    const std::vector<Polynomial>& F,
                                    std::size_t var,
                                    const ProjectionOptions& opts = {});

struct ProjectionLevel {
  std::vector<Polynomial> A;  // working set (raw)
  std::vector<Polynomial> B;  // finest squarefree basis, mvar = this level
  std::vector<Polynomial> F;  // basis elements dividing the designated EC
  std::vector<Polynomial> C;  // contents and pass-downs sent below
  Operator op = Operator::None;
};

struct ProjectionLayers {
  OrderPtr order;
  std::vector<ProjectionLevel> levels;  // index = variable

  /// Operators from the top level down to level 1 (the second variable).
  std::vector<Operator> operator_trace() const;
};

/// Adds p to the set unless an equal polynomial up to sign and squarefree
/// normalisation is present; constants are ignored.
void insert_projection_factor(std::vector<Polynomial>& set, const Polynomial& p);

/// Runs the projection phase from the top variable down to level 0.
ProjectionLayers projection_phase(const OrderPtr& order,
                                  const std::vector<Polynomial>& An,
                                  const Designation& d,
                                  const ProjectionOptions& opts = {});

}  // namespace eccad

#endif  // ECCAD_PROJECTION_HPP
