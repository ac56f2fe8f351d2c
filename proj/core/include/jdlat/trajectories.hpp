#pragma once

#include <string>
#include <vector>

#include "jdlat/lattice.hpp"

namespace jdlat {

/**
 * Two prime intervals are consecutive when their four endpoints form a
 * covering square: a cover-preserving 4-element boolean sublattice, with
 * the intervals as opposite sides (either pairing).
 */
bool consecutive(const FiniteLattice& L, PrimeInterval p, PrimeInterval q);

/// [a,b] and [c,d] are comparable when b <= c or d <= a. Equal intervals
/// are not considered comparable.
bool comparable(const FiniteLattice& L, PrimeInterval p, PrimeInterval q);

/**
 * Partition of the prime intervals into trajectories: the blocks of the
 * reflexive-transitive closure of consecutiveness. Blocks are ordered by
 * their smallest interval index; indices refer to L.covers().
 */
struct TrajectoryPartition {
  std::vector<int> block_of;            // cover index -> block id
  std::vector<std::vector<int>> blocks; // block id -> sorted cover indices
};

TrajectoryPartition trajectories(const FiniteLattice& L);

struct ConditionReport {
  bool pass = true;
  std::string witness;  // first violation, empty when pass
};

/// Every maximal chain crosses every trajectory in exactly one prime
/// interval. Chains are enumerated lazily and abandoned at a second hit.
ConditionReport check_chain_crossing(const FiniteLattice& L);

/// No trajectory contains two distinct comparable prime intervals.
ConditionReport check_trajectory_comparability(const FiniteLattice& L);

/**
 * The three-way characterization for a semimodular lattice:
 * join-distributivity, the chain-crossing condition, and the
 * no-comparable-pair condition must agree (and do, for every semimodular
 * input). Throws std::domain_error naming a violating cover pair when the
 * lattice is not semimodular.
 */
struct CharacterizationReport {
  bool join_distributive = false;
  bool chain_crossing = false;
  bool no_comparable_pair = false;
  bool agree = false;
  std::string witness;
};

CharacterizationReport characterize(const FiniteLattice& L);

}  // namespace jdlat
