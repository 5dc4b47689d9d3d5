// Equational constraints: detection, propagation by resultants, and
// designation of at most one EC per level.

#ifndef ECCAD_ECPROP_HPP
#define ECCAD_ECPROP_HPP

#include <optional>
#include <string>
#include <vector>

#include "eccad/formula.hpp"
#include "eccad/polynomial.hpp"

namespace eccad {

struct Candidate {
  Polynomial poly;         // squarefree part, sign normalized
  std::string provenance;  // "explicit" or "res(<a>,<b>)"
  bool primitive = true;   // content in the mvar is constant
};

/// Candidates bucketed by main variable index.
struct CandidateTable {
  OrderPtr order;
  std::vector<std::vector<Candidate>> levels;
  std::vector<std::string> warnings;

  std::size_t designatable_count(std::size_t level) const;
};

/// Per-level designated ECs; ecs[k] has main variable k when present.
struct Designation {
  std::vector<std::optional<Polynomial>> ecs;
  std::vector<std::string> provenance;

  explicit Designation(std::size_t nvars = 0)
      : ecs(nvars), provenance(nvars) {}
  std::size_t size() const { return ecs.size(); }
  bool has(std::size_t k) const { return k < ecs.size() && ecs[k].has_value(); }
  /// "z: f, y: -, ..." from the top level down.
  std::string to_string(const VariableOrder& order) const;
};

/// Closure of `ecs` under resultants in the common main variable, from the
/// top level downwards.  Resultants are reduced to their squarefree part;
/// constants are dropped and zero resultants are reported as warnings.
CandidateTable propagate(const std::vector<Polynomial>& ecs);

/// Every choice of one primitive candidate per level that has any; levels
/// without primitive candidates stay empty.  The top level varies slowest.
std::vector<Designation> enumerate_designations(const CandidateTable& table);

/// Per level: least sum of term total degrees, then fewest terms, then
/// canonical order.
Designation designate_heuristic(const CandidateTable& table);

/// Throws AlgebraError unless every designated EC is primitive, has the
/// right main variable and matches a candidate up to sign.
void validate_designation(const Designation& d, const CandidateTable& table);

}  // namespace eccad

#endif  // ECCAD_ECPROP_HPP
