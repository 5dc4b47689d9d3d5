// Independent checks on a built CAD: point location, a random-sampling
// truth-invariance oracle and a structural audit.

#ifndef ECCAD_VERIFY_HPP
#define ECCAD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eccad/cad.hpp"

namespace eccad {

/// Leaf containing q (one rational per variable).
const Cell& locate(const CAD& cad, const std::vector<Rational>& q);

/// Cell containing the first level coordinates of q.
const Cell& locate_at_level(const CAD& cad, const std::vector<Rational>& q,
                            std::size_t level);

/// Same for a point with algebraic coordinates (e.g. a stored sample).
const Cell& locate_at_level(const CAD& cad, const SamplePoint& q, std::size_t level);
const Cell& locate(const CAD& cad, const SamplePoint& q);

/// Coordinates num/den with num uniform in [-2^16, 2^16] and den uniform in
/// [1, 2^8], from a 64-bit Mersenne twister seeded with `seed`.
std::vector<std::vector<Rational>> random_points(std::size_t dim, std::size_t count,
                                                 std::uint64_t seed);

struct Mismatch {
  std::vector<Rational> point;
  std::vector<std::uint32_t> cell_index;
  bool formula_value = false;
  Truth cell_truth = Truth::Unset;
};

struct InvarianceReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

InvarianceReport check_truth_invariance(const CAD& cad, const Formula& phi,
                                        std::size_t count, std::uint64_t seed,
                                        unsigned threads = 0);

struct AuditReport {
  std::size_t cells = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Index consecutiveness and parity, strictly increasing samples, section
/// certification against the liftset, trivial-extension shape, and labels.
AuditReport audit_structure(const CAD& cad);

}  // namespace eccad

#endif  // ECCAD_VERIFY_HPP
