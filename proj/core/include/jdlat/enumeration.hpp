#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "jdlat/antimatroid.hpp"
#include "jdlat/ej.hpp"
#include "jdlat/lattice.hpp"
#include "jdlat/perm.hpp"

namespace jdlat {

/**
 * Every antimatroid on {1,...,n}, each exactly once, in increasing order of
 * the candidate bitmask (the empty and full sets are forced present, the
 * remaining subsets of the powerset are toggled freely). The scan is
 * doubly exponential, so degrees above 4 are refused.
 */
void for_each_antimatroid(int n, const std::function<void(const SetFamily&)>& yield);
std::vector<SetFamily> enumerate_antimatroids(int n);

/// One isomorphism class of feasible-set lattices found by the census.
struct CensusEntry {
  int n = 0;
  int class_id = 0;                  // 1-based, in discovery order
  SubsetLattice representative;      // lattice of the first family seen
  int labeled_count = 0;             // antimatroids mapping to this class
  int width = 0;                     // join-width of the representative
  std::optional<PermTuple> witness;  // realizing tuple, when requested
};

/**
 * Groups all antimatroids on {1,...,n} (n <= 4) by lattice isomorphism.
 * Deterministic: class ids follow the enumeration order of the first
 * member of each class. With realize set, a realizing tuple is searched
 * for every representative and stored in the entry.
 */
std::vector<CensusEntry> census_jd_lattices(int n, bool realize = false,
                                            std::uint64_t seed = 0);

/**
 * Searches for a permutation tuple whose union-closure lattice is
 * isomorphic to L. The tuple has max(join_width(L), 2) chains; the
 * (n!)^(chains-1) candidates make this a desk-scale routine. Requires L
 * join-distributive with positive length; throws std::domain_error
 * otherwise. seed 0 scans candidates in lexicographic one-line order, any
 * other seed shuffles each chain's scan order reproducibly.
 */
std::optional<PermTuple> realize_by_sigma(const FiniteLattice& L, std::uint64_t seed = 0);

}  // namespace jdlat
