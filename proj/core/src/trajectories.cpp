#include "jdlat/trajectories.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jdlat {

namespace {

// Opposite sides of a square with bottom at p.a: p = [a,b], q = [c,d],
// a ≺ c, b ≺ d, b != c, b∧c = a, b∨c = d.
bool square_between(const FiniteLattice& L, PrimeInterval p, PrimeInterval q) {
  return p.b != q.a && L.covers_pair(p.a, q.a) && L.covers_pair(p.b, q.b) &&
         L.meet(p.b, q.a) == p.a && L.join(p.b, q.a) == q.b;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

std::string chain_text(const FiniteLattice& L, const std::vector<int>& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) {
      out += " < ";
    }
    out += L.label(chain[i]);
  }
  return out;
}

std::string interval_text(const FiniteLattice& L, PrimeInterval p) {
  return "[" + L.label(p.a) + ", " + L.label(p.b) + "]";
}

}  // namespace

bool consecutive(const FiniteLattice& L, PrimeInterval p, PrimeInterval q) {
  return square_between(L, p, q) || square_between(L, q, p);
}

bool comparable(const FiniteLattice& L, PrimeInterval p, PrimeInterval q) {
  if (p == q) {
    return false;
  }
  return L.leq(p.b, q.a) || L.leq(q.b, p.a);
}

TrajectoryPartition trajectories(const FiniteLattice& L) {
  const auto& prim = L.covers();
  const int t = static_cast<int>(prim.size());
  std::vector<int> parent(static_cast<std::size_t>(t));
  std::iota(parent.begin(), parent.end(), 0);

  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (consecutive(L, prim[static_cast<std::size_t>(i)], prim[static_cast<std::size_t>(j)])) {
        const int ri = find_root(parent, i);
        const int rj = find_root(parent, j);
        if (ri != rj) {
          parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
        }
      }
    }
  }

  TrajectoryPartition out;
  out.block_of.assign(static_cast<std::size_t>(t), -1);
  std::map<int, int> id_of_root;
  for (int i = 0; i < t; ++i) {
    const int r = find_root(parent, i);
    auto [it, fresh] = id_of_root.try_emplace(r, static_cast<int>(out.blocks.size()));
    if (fresh) {
      out.blocks.emplace_back();
    }
    out.block_of[static_cast<std::size_t>(i)] = it->second;
    out.blocks[static_cast<std::size_t>(it->second)].push_back(i);
  }
  return out;
}

ConditionReport check_chain_crossing(const FiniteLattice& L) {
  const TrajectoryPartition part = trajectories(L);
  const auto& prim = L.covers();
  std::map<std::pair<int, int>, int> cover_index;
  for (int i = 0; i < static_cast<int>(prim.size()); ++i) {
    cover_index[{prim[static_cast<std::size_t>(i)].a, prim[static_cast<std::size_t>(i)].b}] = i;
  }

  ConditionReport report;
  std::vector<int> count(part.blocks.size(), 0);
  L.for_each_maximal_chain([&](const std::vector<int>& chain) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
      const int block =
          part.block_of[static_cast<std::size_t>(cover_index.at({chain[s], chain[s + 1]}))];
      if (++count[static_cast<std::size_t>(block)] == 2) {
        report.pass = false;
        report.witness = "trajectory " + std::to_string(block) +
                         " meets the maximal chain " + chain_text(L, chain) + " twice";
        return false;
      }
    }
    for (std::size_t block = 0; block < count.size(); ++block) {
      if (count[block] == 0) {
        report.pass = false;
        report.witness = "trajectory " + std::to_string(block) +
                         " misses the maximal chain " + chain_text(L, chain);
        return false;
      }
    }
    return true;
  });
  return report;
}

ConditionReport check_trajectory_comparability(const FiniteLattice& L) {
  const TrajectoryPartition part = trajectories(L);
  const auto& prim = L.covers();
  ConditionReport report;
  for (std::size_t block = 0; block < part.blocks.size(); ++block) {
    const auto& members = part.blocks[block];
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const PrimeInterval p = prim[static_cast<std::size_t>(members[i])];
        const PrimeInterval q = prim[static_cast<std::size_t>(members[j])];
        if (comparable(L, p, q)) {
          report.pass = false;
          report.witness = "trajectory " + std::to_string(block) + " contains the comparable pair " +
                           interval_text(L, p) + ", " + interval_text(L, q);
          return report;
        }
      }
    }
  }
  return report;
}

CharacterizationReport characterize(const FiniteLattice& L) {
  if (const auto bad = L.semimodularity_violation()) {
    throw std::domain_error("lattice is not semimodular: witness pair (" + L.label(bad->first) +
                            ", " + L.label(bad->second) + ")");
  }
  CharacterizationReport report;
  report.join_distributive = L.is_join_distributive();
  const ConditionReport crossing = check_chain_crossing(L);
  const ConditionReport comparability = check_trajectory_comparability(L);
  report.chain_crossing = crossing.pass;
  report.no_comparable_pair = comparability.pass;
  report.agree = report.join_distributive == report.chain_crossing &&
                 report.chain_crossing == report.no_comparable_pair;
  if (!crossing.pass) {
    report.witness = crossing.witness;
  } else if (!comparability.pass) {
    report.witness = comparability.witness;
  }
  return report;
}

}  // namespace jdlat
