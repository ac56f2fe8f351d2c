#pragma once

#include <string>
#include <vector>

#include "jdlat/antimatroid.hpp"
#include "jdlat/enumeration.hpp"
#include "jdlat/lattice.hpp"
#include "jdlat/perm.hpp"

namespace jdlat {

/**
 * Permutation tuple text: first line "n k", then k-1 lines of n
 * whitespace-separated 1-based images (chains 2..k; chain 1 is the
 * identity and is not written). Parsing accepts any whitespace layout but
 * rejects missing or extra tokens.
 */
PermTuple parse_perm_tuple(const std::string& text);
std::string write_perm_tuple(const PermTuple& chains);

/**
 * Lattice JSON document {"m":…, "labels":[…], "covers":[[a,b],…]} with
 * 0-based element indices; the order is the reflexive-transitive closure
 * of the cover edges. A missing or empty labels array defaults to the
 * element indices.
 */
std::string lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const std::string& text);

/// Hasse diagram in DOT: one node per element (label shown), one edge per
/// cover, elements of equal height on the same rank, bottom rank lowest.
std::string lattice_to_dot(const FiniteLattice& L);

/**
 * Set family text: first line n, then one feasible set per line as sorted
 * space-separated elements, with "-" standing for the empty set.
 */
SetFamily parse_set_family(const std::string& text);
std::string write_set_family(const SetFamily& fam);

/// Census rows as CSV: n,class_id,lattice_size,join_width,labeled_count,
/// witness_sigma. Witness members are written as one-line images joined
/// by "|", or "-" when absent.
std::string census_to_csv(const std::vector<CensusEntry>& entries);
std::string witness_text(const PermTuple& chains);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

PermTuple load_perm_tuple(const std::string& path);
FiniteLattice load_lattice_json(const std::string& path);
SetFamily load_set_family(const std::string& path);

}  // namespace jdlat
