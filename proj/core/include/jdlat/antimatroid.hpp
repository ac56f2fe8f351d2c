#pragma once

#include <string>
#include <vector>

#include "jdlat/ej.hpp"
#include "jdlat/perm.hpp"
#include "jdlat/trajectories.hpp"

namespace jdlat {

/// A family of feasible subsets of {1,...,n}, kept sorted by
/// (cardinality, mask value) and free of duplicates.
struct SetFamily {
  int n = 0;
  std::vector<SubsetMask> feasible;
};

SetFamily make_family(int n, std::vector<SubsetMask> feasible);

struct FamilyCheck {
  bool ok = true;
  std::string diagnosis;  // first failed clause, empty when ok
};

/**
 * Antimatroid test: the family contains the empty set and the full ground
 * set, is closed under pairwise union, and is accessible (every nonempty
 * feasible set keeps some element whose removal stays feasible).
 */
FamilyCheck is_antimatroid(const SetFamily& family);

/// The family under inclusion, validated as a lattice. Requires a valid
/// antimatroid; throws std::invalid_argument with the diagnosis otherwise.
SubsetLattice feasible_lattice(const SetFamily& family);

/// Covers of the feasible lattice must be exactly the single-element
/// extensions within the family.
ConditionReport check_cover_law(const SetFamily& family);

/**
 * Per-trajectory labels: each prime interval [X, Y] of the feasible
 * lattice removes exactly one ground element, and within one trajectory
 * that element is the same. A mix would falsify the labeling law and is
 * reported, not thrown.
 */
struct TrajectoryLabelReport {
  bool consistent = true;
  std::vector<int> label_of_block;  // ground element (1-based) per trajectory
  std::string diagnosis;
};

TrajectoryLabelReport trajectory_labels(const SetFamily& family);

/// The element family of the union-closure lattice of a permutation tuple.
SetFamily family_of_ej_lattice(const PermTuple& chains);

}  // namespace jdlat
