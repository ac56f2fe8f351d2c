#pragma once

#include <vector>

namespace jdlat {

/**
 * A permutation of {1,...,n}. Images are stored and applied 0-based;
 * the 1-based one-line notation ("3 2 4 1" maps 1->3, 2->2, 3->4, 4->1)
 * appears only at the I/O boundary.
 */
class Permutation {
public:
  /// From 0-based images: img[x] is the image of x.
  explicit Permutation(std::vector<int> img);

  static Permutation identity(int n);

  /// From 1-based one-line notation.
  static Permutation from_one_line(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }

  /// 0-based application.
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }

  bool is_identity() const;

  Permutation inverse() const;

  /// 1-based one-line images.
  std::vector<int> one_line() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> img_;
};

/// Right-to-left composition: compose(f, g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);

/**
 * A tuple of k-1 permutations of common degree n, addressed by chain index
 * 2..k. Chain 1 is always the identity and is stored implicitly.
 */
class PermTuple {
public:
  /// members are the chains 2..k, in order; requires at least one member.
  PermTuple(int n, std::vector<Permutation> members);

  int degree() const { return n_; }

  /// Total chain count k, counting the implicit identity.
  int chain_count() const { return static_cast<int>(members_.size()) + 1; }

  /// Chain index i in 1..k; member(1) is the identity.
  const Permutation& member(int i) const;

  /// Componentwise inverse tuple.
  PermTuple inversed() const;

  bool operator==(const PermTuple&) const = default;

private:
  int n_;
  Permutation id_;
  std::vector<Permutation> members_;
};

/**
 * Table of relative permutations between the chains of a tuple read as
 * <p_2,...,p_k> with p_1 = id: between(i,j) = p_j ∘ p_i^{-1}. It carries a
 * position along chain i to the corresponding position along chain j, so
 * between(i,i) = id, between(i,j) = between(j,i)^{-1}, and
 * between(j,t) ∘ between(i,j) = between(i,t).
 */
class TransitionTable {
public:
  explicit TransitionTable(const PermTuple& tuple);

  int degree() const { return n_; }
  int chain_count() const { return k_; }

  /// 1-based chain indices i, j in 1..k.
  const Permutation& between(int i, int j) const;

private:
  int n_, k_;
  std::vector<Permutation> table_;
};

}  // namespace jdlat
