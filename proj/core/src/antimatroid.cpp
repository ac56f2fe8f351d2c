#include "jdlat/antimatroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace jdlat {

SetFamily make_family(int n, std::vector<SubsetMask> feasible) {
  if (n < 1 || n > 62) {
    throw std::invalid_argument("ground degree must be 1..62");
  }
  for (SubsetMask s : feasible) {
    if (s & ~full_mask(n)) {
      throw std::invalid_argument("feasible set exceeds the ground set");
    }
  }
  std::sort(feasible.begin(), feasible.end(), [](SubsetMask a, SubsetMask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
  return SetFamily{n, std::move(feasible)};
}

FamilyCheck is_antimatroid(const SetFamily& family) {
  const std::unordered_set<SubsetMask> members(family.feasible.begin(), family.feasible.end());
  if (!members.contains(0)) {
    return {false, "the empty set is not feasible"};
  }
  if (!members.contains(full_mask(family.n))) {
    return {false, "the full ground set is not feasible"};
  }
  for (std::size_t i = 0; i < family.feasible.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const SubsetMask a = family.feasible[i];
      const SubsetMask b = family.feasible[j];
      if (!members.contains(a | b)) {
        return {false, "union of " + subset_label(a, family.n) + " and " +
                           subset_label(b, family.n) + " is not feasible"};
      }
    }
  }
  for (SubsetMask s : family.feasible) {
    if (s == 0) {
      continue;
    }
    bool accessible = false;
    SubsetMask bits = s;
    while (bits) {
      const SubsetMask low = bits & (~bits + 1);
      if (members.contains(s & ~low)) {
        accessible = true;
        break;
      }
      bits &= bits - 1;
    }
    if (!accessible) {
      return {false, subset_label(s, family.n) + " has no removable element"};
    }
  }
  return {};
}

SubsetLattice feasible_lattice(const SetFamily& family) {
  const FamilyCheck check = is_antimatroid(family);
  if (!check.ok) {
    throw std::invalid_argument("not an antimatroid: " + check.diagnosis);
  }
  return lattice_of_family(family.n, family.feasible);
}

ConditionReport check_cover_law(const SetFamily& family) {
  const SubsetLattice fl = feasible_lattice(family);
  ConditionReport report;
  // Both inclusions: every cover adds one element, and every
  // single-element extension inside the family is a cover.
  for (const PrimeInterval& c : fl.lattice.covers()) {
    const SubsetMask diff = fl.sets[static_cast<std::size_t>(c.b)] ^
                            fl.sets[static_cast<std::size_t>(c.a)];
    if (std::popcount(diff) != 1 ||
        (diff & fl.sets[static_cast<std::size_t>(c.a)]) != 0) {
      report.pass = false;
      report.witness = "cover " + fl.lattice.label(c.a) + " < " + fl.lattice.label(c.b) +
                       " is not a single-element extension";
      return report;
    }
  }
  for (int i = 0; i < fl.lattice.size(); ++i) {
    for (int j = 0; j < fl.lattice.size(); ++j) {
      const SubsetMask a = fl.sets[static_cast<std::size_t>(i)];
      const SubsetMask b = fl.sets[static_cast<std::size_t>(j)];
      if ((a & ~b) == 0 && std::popcount(b ^ a) == 1 && !fl.lattice.covers_pair(i, j)) {
        report.pass = false;
        report.witness = "single-element extension " + fl.lattice.label(i) + " < " +
                         fl.lattice.label(j) + " is not a cover";
        return report;
      }
    }
  }
  return report;
}

TrajectoryLabelReport trajectory_labels(const SetFamily& family) {
  const SubsetLattice fl = feasible_lattice(family);
  const TrajectoryPartition part = trajectories(fl.lattice);
  const auto& prim = fl.lattice.covers();

  TrajectoryLabelReport report;
  report.label_of_block.assign(part.blocks.size(), 0);
  for (std::size_t block = 0; block < part.blocks.size(); ++block) {
    int label = 0;
    for (int index : part.blocks[block]) {
      const PrimeInterval p = prim[static_cast<std::size_t>(index)];
      const SubsetMask diff = fl.sets[static_cast<std::size_t>(p.b)] ^
                              fl.sets[static_cast<std::size_t>(p.a)];
      if (std::popcount(diff) != 1) {
        report.consistent = false;
        report.diagnosis = "cover " + fl.lattice.label(p.a) + " < " + fl.lattice.label(p.b) +
                           " does not remove a single element";
        return report;
      }
      const int removed = std::countr_zero(diff) + 1;
      if (label == 0) {
        label = removed;
      } else if (label != removed) {
        report.consistent = false;
        report.diagnosis = "trajectory " + std::to_string(block) + " mixes removed elements " +
                           std::to_string(label) + " and " + std::to_string(removed);
        return report;
      }
    }
    report.label_of_block[block] = label;
  }
  return report;
}

SetFamily family_of_ej_lattice(const PermTuple& chains) {
  const SubsetLattice ej = build_ej_lattice(chains);
  return make_family(chains.degree(), ej.sets);
}

}  // namespace jdlat
