#include "jdlat/coord.hpp"

#include <algorithm>
#include <stdexcept>

namespace jdlat {

namespace {

void check_coords(const TransitionTable& table, const CoordTuple& x) {
  if (static_cast<int>(x.size()) != table.chain_count()) {
    throw std::invalid_argument("coordinate tuple arity must equal the chain count");
  }
  for (int v : x) {
    if (v < 0 || v > table.degree()) {
      throw std::invalid_argument("coordinate out of range 0..n");
    }
  }
}

}  // namespace

std::string tuple_label(const CoordTuple& x, int n) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (n > 9 && i > 0) {
      out += '.';
    }
    out += std::to_string(x[i]);
  }
  return out;
}

bool is_eligible(const TransitionTable& table, const CoordTuple& x) {
  check_coords(table, x);
  const int n = table.degree();
  const int k = table.chain_count();
  for (int i = 1; i <= k; ++i) {
    const int xi = x[static_cast<std::size_t>(i - 1)];
    if (xi >= n) {
      continue;
    }
    for (int j = 1; j <= k; ++j) {
      // 0-based reading of the 1-based condition p_ij(x_i + 1) >= x_j + 1.
      if (table.between(i, j)(xi) < x[static_cast<std::size_t>(j - 1)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_eligible(const PermTuple& tuple, const CoordTuple& x) {
  return is_eligible(TransitionTable(tuple), x);
}

std::optional<int> TupleLattice::index_of(const CoordTuple& x) const {
  const auto it = std::lower_bound(tuples.begin(), tuples.end(), x);
  if (it == tuples.end() || *it != x) {
    return std::nullopt;
  }
  return static_cast<int>(it - tuples.begin());
}

TupleLattice build_coord_lattice(const PermTuple& tuple) {
  const TransitionTable table(tuple);
  const int n = tuple.degree();
  const int k = tuple.chain_count();

  std::vector<CoordTuple> eligible;
  CoordTuple x(static_cast<std::size_t>(k), 0);
  // Odometer over {0..n-1}^k; the all-n top is appended afterwards.
  while (true) {
    if (is_eligible(table, x)) {
      eligible.push_back(x);
    }
    int pos = k - 1;
    while (pos >= 0 && x[static_cast<std::size_t>(pos)] == n - 1) {
      x[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++x[static_cast<std::size_t>(pos)];
  }
  eligible.emplace_back(static_cast<std::size_t>(k), n);
  std::sort(eligible.begin(), eligible.end());

  const int m = static_cast<int>(eligible.size());
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(m),
                                     std::vector<bool>(static_cast<std::size_t>(m), false));
  std::vector<std::string> labels;
  labels.reserve(eligible.size());
  for (int i = 0; i < m; ++i) {
    labels.push_back(tuple_label(eligible[static_cast<std::size_t>(i)], n));
    for (int j = 0; j < m; ++j) {
      const CoordTuple& a = eligible[static_cast<std::size_t>(i)];
      const CoordTuple& b = eligible[static_cast<std::size_t>(j)];
      bool below = true;
      for (int c = 0; c < k; ++c) {
        if (a[static_cast<std::size_t>(c)] > b[static_cast<std::size_t>(c)]) {
          below = false;
          break;
        }
      }
      leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = below;
    }
  }
  return TupleLattice{FiniteLattice::from_order(leq, std::move(labels)), std::move(eligible), n};
}

CoordTuple coord_meet(const CoordTuple& x, const CoordTuple& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("coordinate tuple arities differ");
  }
  CoordTuple z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = std::min(x[i], y[i]);
  }
  return z;
}

CoordTuple coord_join(const TransitionTable& table, const CoordTuple& x, const CoordTuple& y) {
  check_coords(table, x);
  check_coords(table, y);
  const int n = table.degree();
  const int k = table.chain_count();
  CoordTuple z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = std::max(x[i], y[i]);
  }
  // Bump saturation, violating pairs scanned in lexicographic order.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= k && !changed; ++i) {
      const int zi = z[static_cast<std::size_t>(i - 1)];
      if (zi >= n) {
        continue;
      }
      for (int j = 1; j <= k; ++j) {
        if (table.between(i, j)(zi) < z[static_cast<std::size_t>(j - 1)]) {
          ++z[static_cast<std::size_t>(i - 1)];
          changed = true;
          break;
        }
      }
    }
  }
  return z;
}

CoordTuple coord_join(const PermTuple& tuple, const CoordTuple& x, const CoordTuple& y) {
  return coord_join(TransitionTable(tuple), x, y);
}

std::vector<CoordTuple> meet_irreducible_tuples(const PermTuple& tuple) {
  const int n = tuple.degree();
  const int k = tuple.chain_count();
  std::vector<CoordTuple> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    CoordTuple row(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
      row[static_cast<std::size_t>(j - 1)] = tuple.member(j)(i);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace jdlat
