#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "jdlat/coord.hpp"
#include "jdlat/perm.hpp"

using jdlat::build_coord_lattice;
using jdlat::coord_join;
using jdlat::coord_meet;
using jdlat::CoordTuple;
using jdlat::is_eligible;
using jdlat::meet_irreducible_tuples;
using jdlat::Permutation;
using jdlat::PermTuple;
using jdlat::TransitionTable;
using jdlat::tuple_label;
using jdlat::TupleLattice;

namespace {

// The inverse-side tuple of the running example.
PermTuple example_inverse() {
  return PermTuple(4, {Permutation::from_one_line({4, 2, 1, 3}),
                       Permutation::from_one_line({3, 2, 4, 1})});
}

PermTuple random_tuple(int n, int k, std::mt19937_64& rng) {
  std::vector<Permutation> members;
  for (int i = 1; i < k; ++i) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    members.emplace_back(image);
  }
  return PermTuple(n, std::move(members));
}

}  // namespace

TEST_CASE("tuple labels") {
  CHECK(tuple_label({0, 2, 0}, 4) == "020");
  CHECK(tuple_label({4, 4, 4}, 4) == "444");
  CHECK(tuple_label({10, 0}, 10) == "10.0");
}

TEST_CASE("eligibility on the running example") {
  const PermTuple tuple = example_inverse();
  CHECK(is_eligible(tuple, {0, 0, 0}));
  CHECK(is_eligible(tuple, {0, 2, 0}));
  CHECK(is_eligible(tuple, {1, 1, 1}));
  CHECK(is_eligible(tuple, {3, 2, 0}));
  CHECK(is_eligible(tuple, {4, 4, 4}));

  CHECK_FALSE(is_eligible(tuple, {0, 0, 3}));
  CHECK_FALSE(is_eligible(tuple, {3, 0, 0}));
  CHECK_FALSE(is_eligible(tuple, {2, 2, 2}));
  // Mixing the maximum with smaller coordinates never works.
  CHECK_FALSE(is_eligible(tuple, {4, 0, 0}));
  CHECK_FALSE(is_eligible(tuple, {0, 4, 4}));

  CHECK_THROWS_AS(is_eligible(tuple, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(is_eligible(tuple, {0, 0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(is_eligible(tuple, {0, 0, -1}), std::invalid_argument);
}

TEST_CASE("the example coordinate lattice") {
  const TupleLattice built = build_coord_lattice(example_inverse());
  CHECK(built.ground_degree == 4);
  CHECK(built.lattice.size() == 15);
  CHECK(built.lattice.length() == 4);
  CHECK(built.lattice.is_join_distributive());

  const std::vector<CoordTuple> expected = {
      {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1},
      {0, 2, 0}, {0, 3, 2}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0},
      {1, 1, 1}, {2, 0, 0}, {2, 0, 3}, {3, 2, 0}, {4, 4, 4}};
  CHECK(built.tuples == expected);

  CHECK(built.tuples[static_cast<std::size_t>(built.lattice.bottom())] == CoordTuple{0, 0, 0});
  CHECK(built.tuples[static_cast<std::size_t>(built.lattice.top())] == CoordTuple{4, 4, 4});
  CHECK(built.index_of({0, 2, 0}).has_value());
  CHECK_FALSE(built.index_of({2, 2, 2}).has_value());
  CHECK(built.lattice.label(*built.index_of({0, 2, 0})) == "020");
}

TEST_CASE("meet is componentwise, join is bump saturation") {
  const PermTuple tuple = example_inverse();
  CHECK(coord_meet({1, 1, 1}, {0, 2, 0}) == CoordTuple{0, 1, 0});
  CHECK(is_eligible(tuple, {0, 1, 0}));  // meets of eligible tuples stay eligible

  CHECK(coord_join(tuple, {1, 0, 0}, {0, 1, 0}) == CoordTuple{1, 1, 0});
  CHECK(coord_join(tuple, {0, 2, 0}, {0, 0, 0}) == CoordTuple{0, 2, 0});
  CHECK(coord_join(tuple, {3, 2, 0}, {0, 0, 2}) == CoordTuple{4, 4, 4});

  const TupleLattice built = build_coord_lattice(tuple);
  for (int x = 0; x < built.lattice.size(); ++x) {
    for (int y = 0; y < built.lattice.size(); ++y) {
      const CoordTuple join = coord_join(tuple, built.tuples[static_cast<std::size_t>(x)],
                                         built.tuples[static_cast<std::size_t>(y)]);
      CHECK(join == built.tuples[static_cast<std::size_t>(built.lattice.join(x, y))]);
    }
  }
}

TEST_CASE("join agrees with the order-theoretic join on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 3);
    const PermTuple tuple = random_tuple(n, k, rng);
    const TupleLattice built = build_coord_lattice(tuple);
    const TransitionTable table(tuple);
    for (int x = 0; x < built.lattice.size(); ++x) {
      for (int y = x; y < built.lattice.size(); ++y) {
        const CoordTuple& a = built.tuples[static_cast<std::size_t>(x)];
        const CoordTuple& b = built.tuples[static_cast<std::size_t>(y)];
        CHECK(coord_join(table, a, b) ==
              built.tuples[static_cast<std::size_t>(built.lattice.join(x, y))]);
        CHECK(coord_meet(a, b) ==
              built.tuples[static_cast<std::size_t>(built.lattice.meet(x, y))]);
      }
    }
  }
}

TEST_CASE("meet-irreducible tuples come straight from the permutations") {
  const PermTuple tuple = example_inverse();
  const std::vector<CoordTuple> formula = meet_irreducible_tuples(tuple);
  const std::vector<CoordTuple> expected = {{0, 3, 2}, {1, 1, 1}, {2, 0, 3}, {3, 2, 0}};
  CHECK(formula == expected);

  const TupleLattice built = build_coord_lattice(tuple);
  std::vector<CoordTuple> brute;
  for (int x : built.lattice.meet_irreducibles()) {
    brute.push_back(built.tuples[static_cast<std::size_t>(x)]);
  }
  std::vector<CoordTuple> sorted = formula;
  std::sort(sorted.begin(), sorted.end());
  std::sort(brute.begin(), brute.end());
  CHECK(sorted == brute);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 3);
    const PermTuple t = random_tuple(n, k, rng);
    const TupleLattice lat = build_coord_lattice(t);
    std::vector<CoordTuple> via_formula = meet_irreducible_tuples(t);
    std::vector<CoordTuple> via_lattice;
    for (int x : lat.lattice.meet_irreducibles()) {
      via_lattice.push_back(lat.tuples[static_cast<std::size_t>(x)]);
    }
    std::sort(via_formula.begin(), via_formula.end());
    std::sort(via_lattice.begin(), via_lattice.end());
    CHECK(via_formula == via_lattice);
  }
}
