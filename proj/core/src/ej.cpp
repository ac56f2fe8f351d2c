#include "jdlat/ej.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace jdlat {

namespace {

void check_degree(int n) {
  if (n < 1 || n > 62) {
    throw std::invalid_argument("subset masks support degrees 1..62");
  }
}

bool family_order(SubsetMask a, SubsetMask b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) {
    return ca < cb;
  }
  return a < b;
}

}  // namespace

std::string subset_label(SubsetMask s, int n) {
  if (s == 0) {
    return "{}";
  }
  std::string out;
  for (int e = 1; e <= n; ++e) {
    if (mask_contains(s, e)) {
      if (n > 9 && !out.empty()) {
        out += '.';
      }
      out += std::to_string(e);
    }
  }
  return out;
}

std::optional<int> SubsetLattice::index_of(SubsetMask s) const {
  const auto it = std::lower_bound(sets.begin(), sets.end(), s, family_order);
  if (it == sets.end() || *it != s) {
    return std::nullopt;
  }
  return static_cast<int>(it - sets.begin());
}

SubsetLattice lattice_of_family(int n, std::vector<SubsetMask> family) {
  check_degree(n);
  std::sort(family.begin(), family.end(), family_order);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (SubsetMask s : family) {
    if (s & ~full_mask(n)) {
      throw std::invalid_argument("family member exceeds the ground set");
    }
  }
  const int m = static_cast<int>(family.size());
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(m),
                                     std::vector<bool>(static_cast<std::size_t>(m), false));
  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (int i = 0; i < m; ++i) {
    labels.push_back(subset_label(family[static_cast<std::size_t>(i)], n));
    for (int j = 0; j < m; ++j) {
      const SubsetMask a = family[static_cast<std::size_t>(i)];
      const SubsetMask b = family[static_cast<std::size_t>(j)];
      leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (a & ~b) == 0;
    }
  }
  SubsetLattice out{FiniteLattice::from_order(leq, std::move(labels)), std::move(family), n};
  return out;
}

std::vector<SubsetMask> union_closure(std::vector<SubsetMask> generators) {
  std::unordered_set<SubsetMask> seen(generators.begin(), generators.end());
  std::vector<SubsetMask> family(seen.begin(), seen.end());
  // Worklist saturation: union every new member with everything present.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const SubsetMask u = family[i] | family[j];
      if (seen.insert(u).second) {
        family.push_back(u);
      }
    }
  }
  std::sort(family.begin(), family.end(), family_order);
  return family;
}

std::vector<GeneratingChain> generating_chains(const PermTuple& chains) {
  check_degree(chains.degree());
  std::vector<GeneratingChain> out;
  out.reserve(static_cast<std::size_t>(chains.chain_count()));
  for (int i = 1; i <= chains.chain_count(); ++i) {
    GeneratingChain c;
    c.chain_index = i;
    c.prefixes.reserve(static_cast<std::size_t>(chains.degree()) + 1);
    SubsetMask acc = 0;
    c.prefixes.push_back(acc);
    for (int j = 0; j < chains.degree(); ++j) {
      acc |= SubsetMask{1} << chains.member(i)(j);
      c.prefixes.push_back(acc);
    }
    out.push_back(std::move(c));
  }
  return out;
}

SubsetLattice build_ej_lattice(const PermTuple& chains) {
  std::vector<SubsetMask> generators;
  for (const GeneratingChain& c : generating_chains(chains)) {
    generators.insert(generators.end(), c.prefixes.begin(), c.prefixes.end());
  }
  return lattice_of_family(chains.degree(), union_closure(std::move(generators)));
}

}  // namespace jdlat
