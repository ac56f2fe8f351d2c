#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jdlat {

/// A cover pair a ≺ b.
struct PrimeInterval {
  int a;
  int b;

  bool operator==(const PrimeInterval&) const = default;
};

/**
 * An explicit finite lattice: element indices 0..m-1, the full order
 * relation, and everything derived from it (covers, meet/join tables,
 * heights). Instances are immutable once built; every query is const and
 * safe to run concurrently on a shared instance.
 *
 * Construction validates lattice-hood: the relation must be a partial
 * order and every pair of elements must have a least upper bound and a
 * greatest lower bound. Violations throw std::invalid_argument naming an
 * offending pair.
 */
class FiniteLattice {
public:
  /// Builds from an explicit m x m relation; leq[x][y] means x <= y.
  static FiniteLattice from_order(const std::vector<std::vector<bool>>& leq,
                                  std::vector<std::string> labels = {});

  /// Builds from cover (or any generating) edges; the order is the
  /// reflexive-transitive closure.
  static FiniteLattice from_covers(int m, const std::vector<std::pair<int, int>>& edges,
                                   std::vector<std::string> labels = {});

  int size() const { return m_; }
  bool leq(int x, int y) const {
    return (up_[static_cast<std::size_t>(x) * static_cast<std::size_t>(words_) +
                static_cast<std::size_t>(y / 64)] >>
            (y % 64)) &
           1u;
  }
  bool covers_pair(int a, int b) const;

  const std::vector<PrimeInterval>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return upcov_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& lower_covers(int x) const { return downcov_[static_cast<std::size_t>(x)]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int meet(int x, int y) const { return meet_[idx(x, y)]; }
  int join(int x, int y) const { return join_[idx(x, y)]; }

  /// Longest chain from the bottom to x, counted in covers.
  int height(int x) const { return height_[static_cast<std::size_t>(x)]; }

  /// Longest chain of the whole lattice = height(top()).
  int length() const { return height_[static_cast<std::size_t>(top_)]; }

  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Same lattice with different display labels.
  FiniteLattice with_labels(std::vector<std::string> labels) const;

  /// Elements with exactly one lower cover (so never the bottom).
  std::vector<int> join_irreducibles() const;
  /// Elements with exactly one upper cover (so never the top).
  std::vector<int> meet_irreducibles() const;

  /// Largest antichain among the join-irreducible elements.
  int join_width() const;

  /**
   * Enumerates every maximal chain bottom..top as an element sequence.
   * The visitor returns false to stop the enumeration early.
   */
  void for_each_maximal_chain(const std::function<bool(const std::vector<int>&)>& visit) const;
  std::vector<std::vector<int>> maximal_chains() const;

  /// a∧b ≺ a implies b ≺ a∨b, for all a, b.
  bool is_semimodular() const;
  /// First pair (a, b) breaking semimodularity, if any.
  std::optional<std::pair<int, int>> semimodularity_violation() const;

  /// a∧b = a∧c implies a∧b = a∧(b∨c), for all a, b, c.
  bool is_meet_semidistributive() const;

  /// Join of the upper covers of x; undefined at the top (throws).
  int upstar(int x) const;

  /// Every interval [x, upstar(x)] is distributive.
  bool is_join_distributive() const;

  /// Induced lattice on {z : x <= z <= y}; requires x <= y.
  FiniteLattice interval(int x, int y) const;

private:
  FiniteLattice() = default;

  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(y);
  }

  void derive_structure();  // covers, heights, bottom/top, meet/join tables

  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> up_;    // row x: bits y with x <= y
  std::vector<std::uint64_t> down_;  // row x: bits y with y <= x
  std::vector<int> meet_, join_;
  std::vector<PrimeInterval> covers_;
  std::vector<std::vector<int>> upcov_, downcov_;
  std::vector<int> height_;
  int bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

/**
 * Order isomorphism search. Returns a bijection f with
 * a.leq(x,y) == b.leq(f(x),f(y)), or nullopt. Candidates are matched by the
 * (height, lower-cover count, upper-cover count) signature, ties broken by
 * index, so the returned bijection is deterministic.
 */
std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace jdlat
