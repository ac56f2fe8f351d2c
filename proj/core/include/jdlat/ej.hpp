#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jdlat/lattice.hpp"
#include "jdlat/perm.hpp"

namespace jdlat {

/// A subset of {1,...,n} as a machine word; bit e-1 stands for element e.
/// Limits the ground degree to 62, far above desk scale.
using SubsetMask = std::uint64_t;

inline SubsetMask full_mask(int n) { return (SubsetMask{1} << n) - 1; }
inline bool mask_contains(SubsetMask s, int element_1based) {
  return (s >> (element_1based - 1)) & 1u;
}

/// Display form: elements listed without separators ("134"); "{}" for the
/// empty set. Falls back to dot separation when n > 9.
std::string subset_label(SubsetMask s, int n);

/// An inclusion-ordered lattice whose elements carry subset masks, in the
/// fixed element order (cardinality, then mask value).
struct SubsetLattice {
  FiniteLattice lattice;
  std::vector<SubsetMask> sets;
  int ground_degree = 0;

  std::optional<int> index_of(SubsetMask s) const;
};

/// Orders a family by (cardinality, mask value), drops duplicates, and
/// validates the inclusion order as a lattice.
SubsetLattice lattice_of_family(int n, std::vector<SubsetMask> family);

/// Smallest family containing the input and closed under pairwise union.
std::vector<SubsetMask> union_closure(std::vector<SubsetMask> generators);

/// The n+1 nested prefixes {p(1),...,p(j)} of one chain permutation.
struct GeneratingChain {
  int chain_index = 0;  // 1..k
  std::vector<SubsetMask> prefixes;
};

/// One prefix chain per tuple member, chain 1 from the identity.
std::vector<GeneratingChain> generating_chains(const PermTuple& chains);

/// Union-closure of the k generating prefix chains inside the powerset of
/// {1,...,n}, ordered by inclusion. Always a lattice: it contains the empty
/// set and the full set.
SubsetLattice build_ej_lattice(const PermTuple& chains);

}  // namespace jdlat
