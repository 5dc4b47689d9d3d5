// CAD construction: base phase, reduced lifting with false-cell pruning,
// well-orientedness failure and truth labelling.

#ifndef ECCAD_CAD_HPP
#define ECCAD_CAD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eccad/ecprop.hpp"
#include "eccad/formula.hpp"
#include "eccad/projection.hpp"
#include "eccad/realalg.hpp"

namespace eccad {

enum class Truth { Unset, False, True };

/// When sector cells over a designated EC are extended trivially instead of
/// being lifted.
enum class PrunePolicy {
  /// Prune at level k when E_{k-1} is designated and level k-1 was not
  /// itself pruned.
  Alternating,
  /// Prune at every level k with E_{k-1} designated.
  EveryLevel,
  None,
};

std::string prune_policy_name(PrunePolicy p);

struct BuildOptions {
  PrunePolicy prune = PrunePolicy::Alternating;
  /// Lift with the whole basis B_k at every level instead of F_k.
  bool full_lift = false;
  ProjectionOptions projection;
  /// Worker threads for stack generation and labelling; 0 reads
  /// ECCAD_THREADS and falls back to the hardware concurrency.
  unsigned threads = 0;
  /// Require designated ECs to be explicit or propagated constraints.
  bool check_designation = true;
};

constexpr int kTrivialLift = -1;
constexpr int kLeaf = -2;

struct Cell {
  std::vector<std::uint32_t> index;
  SamplePoint sample;
  /// How the children were produced: a liftset id, kTrivialLift, or kLeaf.
  int lift = kLeaf;
  /// The cell itself came from a trivial extension (or descends from one).
  bool trivial = false;
  Truth truth = Truth::Unset;
  std::vector<Cell> children;

  std::size_t level() const { return index.size(); }
  bool is_section() const { return !index.empty() && index.back() % 2 == 0; }
};

struct LiftSet {
  int id = 0;
  std::size_t level = 0;  // variable index whose roots are isolated
  std::vector<Polynomial> polys;
};

struct FailureWitness {
  std::size_t level = 0;  // variable index being lifted
  Polynomial poly;
  std::vector<std::uint32_t> cell_index;
  SamplePoint sample;

  std::string to_string(const VariableOrder& order) const;
};

enum class Status { Complete, Fail };

struct CAD {
  OrderPtr order;
  Designation designation;
  ProjectionLayers layers;
  std::vector<LiftSet> liftsets;
  std::vector<bool> pruned_levels;  // per variable index
  Status status = Status::Complete;
  std::optional<FailureWitness> failure;
  Cell root;
  std::vector<std::size_t> level_counts;  // cells per level, level 1 first

  std::size_t leaf_count() const {
    return level_counts.empty() ? 1 : level_counts.back();
  }
  std::vector<const Cell*> cells_at_level(std::size_t level) const;
  std::vector<const Cell*> leaves() const { return cells_at_level(order->size()); }
  std::size_t true_leaf_count() const;
};

/// Which levels are pruned for a designation under a policy.
std::vector<bool> pruned_levels(const Designation& d, PrunePolicy policy);

/// The rational strictly between a and b (a < b) with the least
/// denominator, then the least absolute numerator.  Depends only on the two
/// values.
Rational sector_sample(const RealAlgebraic& a, const RealAlgebraic& b);
Rational below_sample(const RealAlgebraic& a);  // floor(a) - 1
Rational above_sample(const RealAlgebraic& a);  // ceil(a) + 1

/// Children of `cell` from the roots of `polys` in the next variable.
/// Throws NullifiedError when a polynomial vanishes identically there.
std::vector<Cell> gen_stack(const Cell& cell, const std::vector<Polynomial>& polys);

/// The single-child cylinder: index 1, coordinate 0.
Cell extend_trivial(const Cell& cell);

/// Level-1 cells of R from the designated EC or the whole basis.
std::vector<Cell> base_phase(const std::vector<Polynomial>& polys);

/// Complete pipeline: projection, base, lifting, truth labelling.
CAD build_cad(const Formula& phi, const OrderPtr& order, const Designation& d,
              const BuildOptions& opts = {});

/// Labels every leaf: trivial leaves false, others by exact evaluation.
void label_truth(CAD& cad, const Formula& phi, unsigned threads = 0);

/// Thread count from ECCAD_THREADS or the hardware.
unsigned default_threads();

}  // namespace eccad

#endif  // ECCAD_CAD_HPP
