#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jdlat/lattice.hpp"
#include "jdlat/perm.hpp"

namespace jdlat {

/// A k-tuple of coordinates, each in 0..n.
using CoordTuple = std::vector<int>;

/// Display form: digits concatenated ("020"); dot-separated when n > 9.
std::string tuple_label(const CoordTuple& x, int n);

/**
 * Eligibility of x for the tuple's transition table: whenever x_i < n, the
 * transition from chain i to chain j sends position x_i at or above x_j,
 * for every pair i, j. Tuples mixing n with smaller coordinates always
 * fail, so the eligible set is {0..n-1}^k plus the all-n top.
 */
bool is_eligible(const TransitionTable& table, const CoordTuple& x);
bool is_eligible(const PermTuple& tuple, const CoordTuple& x);

/// A componentwise-ordered lattice whose elements carry coordinate tuples,
/// in lexicographic element order.
struct TupleLattice {
  FiniteLattice lattice;
  std::vector<CoordTuple> tuples;
  int ground_degree = 0;

  std::optional<int> index_of(const CoordTuple& x) const;
};

/// All eligible tuples under the componentwise order, validated as a
/// lattice. The scan covers {0..n-1}^k and appends the all-n top.
TupleLattice build_coord_lattice(const PermTuple& tuple);

/// Componentwise minimum; eligibility is preserved.
CoordTuple coord_meet(const CoordTuple& x, const CoordTuple& y);

/**
 * Least eligible tuple above the componentwise maximum of x and y, by bump
 * saturation: while some pair (i, j) in lexicographic order violates
 * eligibility, raise z_i by one and rescan. Reaches the least fixed point
 * because the eligible set is closed under componentwise minimum and
 * contains the all-n top.
 */
CoordTuple coord_join(const TransitionTable& table, const CoordTuple& x, const CoordTuple& y);
CoordTuple coord_join(const PermTuple& tuple, const CoordTuple& x, const CoordTuple& y);

/**
 * The n meet-irreducible tuples of the coordinatized lattice, directly from
 * the chain permutations: row i (1-based ground element) has coordinate
 * member(j)(i) - 1 in 1-based terms for each chain j.
 */
std::vector<CoordTuple> meet_irreducible_tuples(const PermTuple& tuple);

}  // namespace jdlat
