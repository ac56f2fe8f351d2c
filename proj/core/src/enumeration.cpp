#include "jdlat/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace jdlat {

void for_each_antimatroid(int n, const std::function<void(const SetFamily&)>& yield) {
  if (n < 1) {
    throw std::invalid_argument("ground degree must be positive");
  }
  if (n > 4) {
    throw std::invalid_argument("exhaustive enumeration scans 2^(2^n) families; degree " +
                                std::to_string(n) + " exceeds the supported bound 4");
  }
  const SubsetMask full = full_mask(n);
  const int free_count = static_cast<int>(full) - 1;  // masks strictly between {} and full
  const std::uint32_t picks = std::uint32_t{1} << free_count;
  std::vector<SubsetMask> sets;
  for (std::uint32_t pick = 0; pick < picks; ++pick) {
    sets.clear();
    sets.push_back(0);
    for (int t = 0; t < free_count; ++t) {
      if (pick >> t & 1u) {
        sets.push_back(static_cast<SubsetMask>(t) + 1);
      }
    }
    sets.push_back(full);
    SetFamily candidate = make_family(n, sets);
    if (is_antimatroid(candidate).ok) {
      yield(candidate);
    }
  }
}

std::vector<SetFamily> enumerate_antimatroids(int n) {
  std::vector<SetFamily> out;
  for_each_antimatroid(n, [&out](const SetFamily& fam) { out.push_back(fam); });
  return out;
}

std::vector<CensusEntry> census_jd_lattices(int n, bool realize, std::uint64_t seed) {
  std::vector<CensusEntry> entries;
  // Cheap invariants split the isomorphism tests into small buckets.
  std::map<std::tuple<int, int, std::size_t>, std::vector<std::size_t>> buckets;
  for_each_antimatroid(n, [&](const SetFamily& fam) {
    SubsetLattice built = feasible_lattice(fam);
    const FiniteLattice& L = built.lattice;
    const auto key = std::make_tuple(L.size(), L.length(), L.covers().size());
    for (std::size_t idx : buckets[key]) {
      if (find_isomorphism(entries[idx].representative.lattice, L)) {
        ++entries[idx].labeled_count;
        return;
      }
    }
    const int width = L.join_width();
    buckets[key].push_back(entries.size());
    entries.push_back(CensusEntry{n, static_cast<int>(entries.size()) + 1, std::move(built), 1,
                                  width, std::nullopt});
  });
  if (realize) {
    for (CensusEntry& entry : entries) {
      entry.witness = realize_by_sigma(entry.representative.lattice, seed);
    }
  }
  return entries;
}

std::optional<PermTuple> realize_by_sigma(const FiniteLattice& L, std::uint64_t seed) {
  if (!L.is_join_distributive()) {
    throw std::domain_error("realization needs a join-distributive lattice");
  }
  const int n = L.length();
  if (n == 0) {
    throw std::domain_error("a single-element lattice leaves no positive permutation degree");
  }
  const int target = L.size();
  const int members = std::max(L.join_width(), 2) - 1;

  std::vector<Permutation> all;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    all.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));

  std::vector<std::size_t> base(all.size());
  std::iota(base.begin(), base.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> scan(static_cast<std::size_t>(members), base);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (auto& order : scan) {
      std::shuffle(order.begin(), order.end(), rng);
    }
  }

  std::vector<std::size_t> at(static_cast<std::size_t>(members), 0);
  while (true) {
    std::vector<Permutation> picked;
    picked.reserve(static_cast<std::size_t>(members));
    for (int s = 0; s < members; ++s) {
      picked.push_back(all[scan[static_cast<std::size_t>(s)][at[static_cast<std::size_t>(s)]]]);
    }
    PermTuple candidate(n, std::move(picked));

    std::vector<SubsetMask> generators;
    for (const GeneratingChain& chain : generating_chains(candidate)) {
      generators.insert(generators.end(), chain.prefixes.begin(), chain.prefixes.end());
    }
    if (static_cast<int>(union_closure(std::move(generators)).size()) == target) {
      SubsetLattice built = build_ej_lattice(candidate);
      if (find_isomorphism(L, built.lattice)) {
        return candidate;
      }
    }

    int s = members - 1;
    while (s >= 0 && ++at[static_cast<std::size_t>(s)] == all.size()) {
      at[static_cast<std::size_t>(s)] = 0;
      --s;
    }
    if (s < 0) {
      break;
    }
  }
  return std::nullopt;
}

}  // namespace jdlat
