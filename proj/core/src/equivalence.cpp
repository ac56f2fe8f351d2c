#include "jdlat/equivalence.hpp"

#include <stdexcept>

namespace jdlat {

namespace {

CoordTuple prefix_depths(const PermTuple& chains, SubsetMask u) {
  const int n = chains.degree();
  const int k = chains.chain_count();
  CoordTuple depths(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= k; ++i) {
    const Permutation& p = chains.member(i);
    int j = 0;
    while (j < n && ((u >> p(j)) & 1u)) {
      ++j;
    }
    depths[static_cast<std::size_t>(i - 1)] = j;
  }
  return depths;
}

SubsetMask prefix_union(const PermTuple& chains, const CoordTuple& x) {
  SubsetMask v = 0;
  for (int i = 1; i <= chains.chain_count(); ++i) {
    const Permutation& p = chains.member(i);
    for (int j = 0; j < x[static_cast<std::size_t>(i - 1)]; ++j) {
      v |= SubsetMask{1} << p(j);
    }
  }
  return v;
}

}  // namespace

CoordTuple subset_to_coords(const PermTuple& chains, SubsetMask u) {
  if (u & ~full_mask(chains.degree())) {
    throw std::domain_error("subset exceeds the ground set");
  }
  const CoordTuple depths = prefix_depths(chains, u);
  // Membership in the union-closure lattice is exactly "u is the union of
  // its own chain prefixes".
  if (prefix_union(chains, depths) != u) {
    throw std::domain_error("subset " + subset_label(u, chains.degree()) +
                            " is not in the union-closure lattice of the chains");
  }
  return depths;
}

SubsetMask coords_to_subset(const PermTuple& chains, const CoordTuple& x) {
  if (static_cast<int>(x.size()) != chains.chain_count()) {
    throw std::invalid_argument("coordinate tuple arity must equal the chain count");
  }
  if (!is_eligible(chains.inversed(), x)) {
    throw std::domain_error("tuple " + tuple_label(x, chains.degree()) +
                            " is not eligible for the inverse tuple");
  }
  return prefix_union(chains, x);
}

EquivalenceReport verify_equivalence(const PermTuple& chains) {
  EquivalenceReport report;
  const SubsetLattice ej = build_ej_lattice(chains);
  const TupleLattice cz = build_coord_lattice(chains.inversed());
  const int m = ej.lattice.size();
  report.subset_side_size = m;
  report.coord_side_size = cz.lattice.size();

  auto note = [&](std::string text) {
    if (report.violations.size() < 32) {
      report.violations.push_back(std::move(text));
    }
  };

  if (cz.lattice.size() != m) {
    note("element counts differ: " + std::to_string(m) + " vs " +
         std::to_string(cz.lattice.size()));
  }

  // Image of every subset, with bijectivity bookkeeping.
  std::vector<int> image(static_cast<std::size_t>(m), -1);
  std::vector<bool> hit(static_cast<std::size_t>(cz.lattice.size()), false);
  const int n = chains.degree();
  for (int u = 0; u < m; ++u) {
    CoordTuple x;
    try {
      x = subset_to_coords(chains, ej.sets[static_cast<std::size_t>(u)]);
    } catch (const std::domain_error& e) {
      note(std::string("coordinate map rejected a lattice element: ") + e.what());
      continue;
    }
    const auto target = cz.index_of(x);
    if (!target) {
      note("image " + tuple_label(x, n) + " of " + ej.lattice.label(u) + " is not eligible");
      continue;
    }
    if (hit[static_cast<std::size_t>(*target)]) {
      note("two subsets map to " + tuple_label(x, n));
      continue;
    }
    hit[static_cast<std::size_t>(*target)] = true;
    image[static_cast<std::size_t>(u)] = *target;

    if (coords_to_subset(chains, x) != ej.sets[static_cast<std::size_t>(u)]) {
      note("round trip through coordinates loses " + ej.lattice.label(u));
    }
  }
  for (int t = 0; t < cz.lattice.size(); ++t) {
    if (!hit[static_cast<std::size_t>(t)]) {
      note("tuple " + cz.lattice.label(t) + " has no preimage");
    }
  }

  if (report.violations.empty()) {
    // Order preserved both ways, and with it meets and joins.
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        const bool sub = ej.lattice.leq(u, v);
        const bool coord = cz.lattice.leq(image[static_cast<std::size_t>(u)],
                                          image[static_cast<std::size_t>(v)]);
        if (sub != coord) {
          note("order disagrees on " + ej.lattice.label(u) + ", " + ej.lattice.label(v));
        }
      }
    }
    for (int u = 0; u < m && report.violations.empty(); ++u) {
      for (int v = 0; v < m; ++v) {
        const int ju = image[static_cast<std::size_t>(ej.lattice.join(u, v))];
        const int mu = image[static_cast<std::size_t>(ej.lattice.meet(u, v))];
        if (cz.lattice.join(image[static_cast<std::size_t>(u)],
                            image[static_cast<std::size_t>(v)]) != ju) {
          note("join disagrees on " + ej.lattice.label(u) + ", " + ej.lattice.label(v));
        }
        if (cz.lattice.meet(image[static_cast<std::size_t>(u)],
                            image[static_cast<std::size_t>(v)]) != mu) {
          note("meet disagrees on " + ej.lattice.label(u) + ", " + ej.lattice.label(v));
        }
      }
    }
  }

  report.pass = report.violations.empty();
  return report;
}

}  // namespace jdlat
