#pragma once

#include <string>
#include <vector>

#include "jdlat/coord.hpp"
#include "jdlat/ej.hpp"
#include "jdlat/perm.hpp"

namespace jdlat {

/**
 * Coordinates of a subset u relative to the prefix chains: coordinate i is
 * the longest prefix of chain i contained in u. Requires u to lie in the
 * union-closure lattice of the chains (equivalently, u is recovered as the
 * union of its own prefixes); throws std::domain_error otherwise. The
 * result is always eligible for the inverse tuple.
 */
CoordTuple subset_to_coords(const PermTuple& chains, SubsetMask u);

/**
 * Inverse direction: the union of prefix x_i of chain i, over all chains.
 * Requires x eligible for the inverse tuple; throws std::domain_error
 * otherwise.
 */
SubsetMask coords_to_subset(const PermTuple& chains, const CoordTuple& x);

struct EquivalenceReport {
  bool pass = false;
  int subset_side_size = 0;
  int coord_side_size = 0;
  std::vector<std::string> violations;
};

/**
 * End-to-end check that the union-closure lattice of the chains and the
 * coordinatized lattice of the inverse tuple are one lattice in two
 * dresses: the coordinate map is a bijection, both directions are
 * monotone, and meets and joins transfer. Violations are collected, never
 * thrown.
 */
EquivalenceReport verify_equivalence(const PermTuple& chains);

}  // namespace jdlat
