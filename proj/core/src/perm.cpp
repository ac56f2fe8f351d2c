#include "jdlat/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace jdlat {

namespace {

void check_images(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  if (n == 0) {
    throw std::invalid_argument("permutation degree must be positive");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : img) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("permutation image out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation repeats an image");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  check_images(img_);
}

Permutation Permutation::identity(int n) {
  if (n <= 0) {
    throw std::invalid_argument("permutation degree must be positive");
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  std::vector<int> img;
  img.reserve(images.size());
  for (int v : images) {
    img.push_back(v - 1);
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if ((*this)(x) != x) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 0; x < degree(); ++x) {
    inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
  }
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (int v : img_) {
    out.push_back(v + 1);
  }
  return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("compose: permutation degrees differ");
  }
  std::vector<int> img(static_cast<std::size_t>(g.degree()));
  for (int x = 0; x < g.degree(); ++x) {
    img[static_cast<std::size_t>(x)] = f(g(x));
  }
  return Permutation(std::move(img));
}

PermTuple::PermTuple(int n, std::vector<Permutation> members)
    : n_(n), id_(Permutation::identity(n)), members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("a permutation tuple needs at least one member (k >= 2)");
  }
  for (const Permutation& p : members_) {
    if (p.degree() != n_) {
      throw std::invalid_argument("permutation tuple members must share one degree");
    }
  }
}

const Permutation& PermTuple::member(int i) const {
  if (i < 1 || i > chain_count()) {
    throw std::invalid_argument("chain index out of range");
  }
  if (i == 1) {
    return id_;
  }
  return members_[static_cast<std::size_t>(i - 2)];
}

PermTuple PermTuple::inversed() const {
  std::vector<Permutation> inv;
  inv.reserve(members_.size());
  for (const Permutation& p : members_) {
    inv.push_back(p.inverse());
  }
  return PermTuple(n_, std::move(inv));
}

TransitionTable::TransitionTable(const PermTuple& tuple)
    : n_(tuple.degree()), k_(tuple.chain_count()) {
  table_.reserve(static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_));
  for (int i = 1; i <= k_; ++i) {
    const Permutation inv_i = tuple.member(i).inverse();
    for (int j = 1; j <= k_; ++j) {
      table_.push_back(compose(tuple.member(j), inv_i));
    }
  }
}

const Permutation& TransitionTable::between(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > k_) {
    throw std::invalid_argument("chain index out of range");
  }
  return table_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(k_) +
                static_cast<std::size_t>(j - 1)];
}

}  // namespace jdlat
