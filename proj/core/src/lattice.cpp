#include "jdlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jdlat {

namespace {

std::string pair_text(int x, int y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

FiniteLattice FiniteLattice::from_order(const std::vector<std::vector<bool>>& leq,
                                        std::vector<std::string> labels) {
  const int m = static_cast<int>(leq.size());
  if (m == 0) {
    throw std::invalid_argument("a lattice needs at least one element");
  }
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("order relation must be square");
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != m) {
    throw std::invalid_argument("label count must match element count");
  }

  FiniteLattice L;
  L.m_ = m;
  L.words_ = (m + 63) / 64;
  L.up_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(L.words_), 0);
  L.down_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(L.words_), 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
        L.up_[static_cast<std::size_t>(x) * L.words_ + static_cast<std::size_t>(y / 64)] |=
            std::uint64_t{1} << (y % 64);
        L.down_[static_cast<std::size_t>(y) * L.words_ + static_cast<std::size_t>(x / 64)] |=
            std::uint64_t{1} << (x % 64);
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
      labels.push_back(std::to_string(x));
    }
  }
  L.labels_ = std::move(labels);
  L.derive_structure();
  return L;
}

FiniteLattice FiniteLattice::from_covers(int m, const std::vector<std::pair<int, int>>& edges,
                                         std::vector<std::string> labels) {
  if (m <= 0) {
    throw std::invalid_argument("a lattice needs at least one element");
  }
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(m),
                                     std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int x = 0; x < m; ++x) {
    leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = true;
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw std::invalid_argument("cover edge endpoint out of range");
    }
    if (a == b) {
      throw std::invalid_argument("cover edge endpoints must differ");
    }
    leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  // Warshall closure.
  for (int k = 0; k < m; ++k) {
    for (int x = 0; x < m; ++x) {
      if (leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)]) {
        for (int y = 0; y < m; ++y) {
          if (leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)]) {
            leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
          }
        }
      }
    }
  }
  return from_order(leq, std::move(labels));
}

void FiniteLattice::derive_structure() {
  const int m = m_;
  const auto up_word = [&](int x, int w) -> std::uint64_t {
    return up_[static_cast<std::size_t>(x) * words_ + static_cast<std::size_t>(w)];
  };
  const auto down_word = [&](int x, int w) -> std::uint64_t {
    return down_[static_cast<std::size_t>(x) * words_ + static_cast<std::size_t>(w)];
  };
  const auto has = [&](const std::vector<std::uint64_t>& rows, int x, int y) {
    return (rows[static_cast<std::size_t>(x) * words_ + static_cast<std::size_t>(y / 64)] >>
            (y % 64)) & 1u;
  };

  // Poset axioms.
  for (int x = 0; x < m; ++x) {
    if (!has(up_, x, x)) {
      throw std::invalid_argument("not a poset: relation not reflexive at " + std::to_string(x));
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (has(up_, x, y) && has(up_, y, x)) {
        throw std::invalid_argument("not a poset: antisymmetry fails at " + pair_text(x, y));
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y || !has(up_, x, y)) {
        continue;
      }
      // x <= y requires up(y) ⊆ up(x).
      for (int w = 0; w < words_; ++w) {
        if (up_word(y, w) & ~up_word(x, w)) {
          throw std::invalid_argument("not a poset: transitivity fails via " + pair_text(x, y));
        }
      }
    }
  }

  // Meet and join tables; existence of both for every pair is lattice-hood.
  meet_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  join_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  std::vector<std::uint64_t> buf(static_cast<std::size_t>(words_));
  for (int x = 0; x < m; ++x) {
    for (int y = x; y < m; ++y) {
      // join: least element of up(x) ∩ up(y)
      for (int w = 0; w < words_; ++w) {
        buf[static_cast<std::size_t>(w)] = up_word(x, w) & up_word(y, w);
      }
      int lub = -1;
      for (int w = 0; w < words_ && lub < 0; ++w) {
        std::uint64_t bits = buf[static_cast<std::size_t>(w)];
        while (bits) {
          const int z = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          bool least = true;
          for (int v = 0; v < words_; ++v) {
            if (buf[static_cast<std::size_t>(v)] & ~up_word(z, v)) {
              least = false;
              break;
            }
          }
          if (least) {
            lub = z;
            break;
          }
        }
      }
      if (lub < 0) {
        throw std::invalid_argument("not a lattice: no join for " + pair_text(x, y));
      }
      join_[idx(x, y)] = join_[idx(y, x)] = lub;

      // meet: greatest element of down(x) ∩ down(y)
      for (int w = 0; w < words_; ++w) {
        buf[static_cast<std::size_t>(w)] = down_word(x, w) & down_word(y, w);
      }
      int glb = -1;
      for (int w = 0; w < words_ && glb < 0; ++w) {
        std::uint64_t bits = buf[static_cast<std::size_t>(w)];
        while (bits) {
          const int z = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          bool greatest = true;
          for (int v = 0; v < words_; ++v) {
            if (buf[static_cast<std::size_t>(v)] & ~down_word(z, v)) {
              greatest = false;
              break;
            }
          }
          if (greatest) {
            glb = z;
            break;
          }
        }
      }
      if (glb < 0) {
        throw std::invalid_argument("not a lattice: no meet for " + pair_text(x, y));
      }
      meet_[idx(x, y)] = meet_[idx(y, x)] = glb;
    }
  }

  // Bottom and top.
  bottom_ = top_ = -1;
  for (int x = 0; x < m; ++x) {
    int above = 0, below = 0;
    for (int w = 0; w < words_; ++w) {
      above += std::popcount(up_word(x, w));
      below += std::popcount(down_word(x, w));
    }
    if (above == m) {
      bottom_ = x;
    }
    if (below == m) {
      top_ = x;
    }
  }
  if (bottom_ < 0 || top_ < 0) {
    throw std::invalid_argument("not a lattice: bounds missing");
  }

  // Covers by transitive reduction: a ≺ b iff a < b with nothing strictly between.
  upcov_.assign(static_cast<std::size_t>(m), {});
  downcov_.assign(static_cast<std::size_t>(m), {});
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || !has(up_, a, b)) {
        continue;
      }
      bool is_cover = true;
      for (int w = 0; w < words_ && is_cover; ++w) {
        std::uint64_t between = up_word(a, w) & down_word(b, w);
        if (w == a / 64) {
          between &= ~(std::uint64_t{1} << (a % 64));
        }
        if (w == b / 64) {
          between &= ~(std::uint64_t{1} << (b % 64));
        }
        if (between) {
          is_cover = false;
        }
      }
      if (is_cover) {
        covers_.push_back({a, b});
        upcov_[static_cast<std::size_t>(a)].push_back(b);
        downcov_[static_cast<std::size_t>(b)].push_back(a);
      }
    }
  }

  // Heights by longest path over covers, elements ordered by down-set size.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below_count(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    for (int w = 0; w < words_; ++w) {
      below_count[static_cast<std::size_t>(x)] += std::popcount(down_word(x, w));
    }
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return below_count[static_cast<std::size_t>(a)] < below_count[static_cast<std::size_t>(b)];
  });
  height_.assign(static_cast<std::size_t>(m), 0);
  for (int x : order) {
    int h = 0;
    for (int c : downcov_[static_cast<std::size_t>(x)]) {
      h = std::max(h, height_[static_cast<std::size_t>(c)] + 1);
    }
    height_[static_cast<std::size_t>(x)] = h;
  }
}

bool FiniteLattice::covers_pair(int a, int b) const {
  const auto& ups = upcov_[static_cast<std::size_t>(a)];
  return std::find(ups.begin(), ups.end(), b) != ups.end();
}

FiniteLattice FiniteLattice::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != m_) {
    throw std::invalid_argument("label count must match element count");
  }
  FiniteLattice copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x) {
    if (downcov_[static_cast<std::size_t>(x)].size() == 1) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> FiniteLattice::meet_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x) {
    if (upcov_[static_cast<std::size_t>(x)].size() == 1) {
      out.push_back(x);
    }
  }
  return out;
}

int FiniteLattice::join_width() const {
  const std::vector<int> jir = join_irreducibles();
  const int t = static_cast<int>(jir.size());
  int best = 0;
  std::vector<int> chosen;
  // Exhaustive antichain search with a size-bound prune.
  const std::function<void(int)> grow = [&](int pos) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (t - pos) <= best) {
      return;
    }
    for (int i = pos; i < t; ++i) {
      const int x = jir[static_cast<std::size_t>(i)];
      bool anti = true;
      for (int y : chosen) {
        if (leq(x, y) || leq(y, x)) {
          anti = false;
          break;
        }
      }
      if (anti) {
        chosen.push_back(x);
        grow(i + 1);
        chosen.pop_back();
      }
    }
  };
  grow(0);
  return best;
}

void FiniteLattice::for_each_maximal_chain(
    const std::function<bool(const std::vector<int>&)>& visit) const {
  std::vector<int> path{bottom_};
  const std::function<bool()> dfs = [&]() -> bool {
    const int x = path.back();
    if (x == top_) {
      return visit(path);
    }
    for (int y : upcov_[static_cast<std::size_t>(x)]) {
      path.push_back(y);
      const bool keep_going = dfs();
      path.pop_back();
      if (!keep_going) {
        return false;
      }
    }
    return true;
  };
  dfs();
}

std::vector<std::vector<int>> FiniteLattice::maximal_chains() const {
  std::vector<std::vector<int>> out;
  for_each_maximal_chain([&](const std::vector<int>& chain) {
    out.push_back(chain);
    return true;
  });
  return out;
}

std::optional<std::pair<int, int>> FiniteLattice::semimodularity_violation() const {
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      if (covers_pair(meet(a, b), a) && !covers_pair(b, join(a, b))) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

bool FiniteLattice::is_semimodular() const { return !semimodularity_violation().has_value(); }

bool FiniteLattice::is_meet_semidistributive() const {
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      const int ab = meet(a, b);
      for (int c = 0; c < m_; ++c) {
        if (meet(a, c) == ab && meet(a, join(b, c)) != ab) {
          return false;
        }
      }
    }
  }
  return true;
}

int FiniteLattice::upstar(int x) const {
  if (x == top_) {
    throw std::domain_error("upstar is undefined at the top element");
  }
  int z = x;
  for (int c : upcov_[static_cast<std::size_t>(x)]) {
    z = join(z, c);
  }
  return z;
}

bool FiniteLattice::is_join_distributive() const {
  std::vector<int> zone;
  for (int x = 0; x < m_; ++x) {
    if (x == top_) {
      continue;
    }
    const int star = upstar(x);
    zone.clear();
    for (int z = 0; z < m_; ++z) {
      if (leq(x, z) && leq(z, star)) {
        zone.push_back(z);
      }
    }
    // Distributivity of [x, upstar(x)] by the triple law; the interval is
    // closed under the ambient meet and join.
    for (int a : zone) {
      for (int b : zone) {
        const int ab = meet(a, b);
        for (int c : zone) {
          if (meet(a, join(b, c)) != join(ab, meet(a, c))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

FiniteLattice FiniteLattice::interval(int x, int y) const {
  if (!leq(x, y)) {
    throw std::domain_error("interval requires comparable endpoints");
  }
  std::vector<int> zs;
  for (int z = 0; z < m_; ++z) {
    if (leq(x, z) && leq(z, y)) {
      zs.push_back(z);
    }
  }
  const int s = static_cast<int>(zs.size());
  std::vector<std::vector<bool>> sub(static_cast<std::size_t>(s),
                                     std::vector<bool>(static_cast<std::size_t>(s), false));
  std::vector<std::string> labels;
  labels.reserve(zs.size());
  for (int i = 0; i < s; ++i) {
    labels.push_back(label(zs[static_cast<std::size_t>(i)]));
    for (int j = 0; j < s; ++j) {
      sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          leq(zs[static_cast<std::size_t>(i)], zs[static_cast<std::size_t>(j)]);
    }
  }
  return from_order(sub, std::move(labels));
}

namespace {

struct Signature {
  int height;
  int down_degree;
  int up_degree;

  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteLattice& L) {
  std::vector<Signature> sig;
  sig.reserve(static_cast<std::size_t>(L.size()));
  for (int x = 0; x < L.size(); ++x) {
    sig.push_back({L.height(x), static_cast<int>(L.lower_covers(x).size()),
                   static_cast<int>(L.upper_covers(x).size())});
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size() || a.length() != b.length() ||
      a.covers().size() != b.covers().size()) {
    return std::nullopt;
  }
  const int m = a.size();
  const std::vector<Signature> sa = signatures(a);
  const std::vector<Signature> sb = signatures(b);
  {
    std::vector<Signature> ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) {
      return std::nullopt;
    }
  }

  // Candidates of b per signature, in index order.
  std::map<Signature, std::vector<int>> pool;
  for (int y = 0; y < m; ++y) {
    pool[sb[static_cast<std::size_t>(y)]].push_back(y);
  }
  // Assign a's elements grouped by signature, ties broken by index.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tie(sa[static_cast<std::size_t>(x)], x) <
           std::tie(sa[static_cast<std::size_t>(y)], y);
  });

  std::vector<int> map_ab(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(m), false);

  const std::function<bool(int)> assign = [&](int pos) -> bool {
    if (pos == m) {
      return true;
    }
    const int x = order[static_cast<std::size_t>(pos)];
    for (int y : pool[sa[static_cast<std::size_t>(x)]]) {
      if (used[static_cast<std::size_t>(y)]) {
        continue;
      }
      bool ok = true;
      for (int q = 0; q < pos; ++q) {
        const int u = order[static_cast<std::size_t>(q)];
        const int v = map_ab[static_cast<std::size_t>(u)];
        if (a.leq(u, x) != b.leq(v, y) || a.leq(x, u) != b.leq(y, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        continue;
      }
      map_ab[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (assign(pos + 1)) {
        return true;
      }
      map_ab[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = false;
    }
    return false;
  };

  if (!assign(0)) {
    return std::nullopt;
  }
  return map_ab;
}

}  // namespace jdlat
