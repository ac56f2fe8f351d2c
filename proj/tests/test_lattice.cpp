#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "jdlat/lattice.hpp"

using jdlat::FiniteLattice;
using jdlat::PrimeInterval;

namespace {

FiniteLattice diamond() {  // M3: bottom, three atoms, top
  return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                                    {"0", "a", "b", "c", "1"});
}

FiniteLattice pentagon() {  // N5: 0 < a < b < 1 and 0 < c < 1
  return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                                    {"0", "a", "b", "c", "1"});
}

FiniteLattice square() {  // B2
  return FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FiniteLattice cube() {  // B3, indices by (popcount, value)
  return FiniteLattice::from_covers(8, {{0, 1},
                                        {0, 2},
                                        {0, 3},
                                        {1, 4},
                                        {1, 5},
                                        {2, 4},
                                        {2, 6},
                                        {3, 5},
                                        {3, 6},
                                        {4, 7},
                                        {5, 7},
                                        {6, 7}});
}

FiniteLattice chain(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x + 1 < m; ++x) {
    edges.emplace_back(x, x + 1);
  }
  return FiniteLattice::from_covers(m, edges);
}

}  // namespace

TEST_CASE("structure of the diamond") {
  const FiniteLattice m3 = diamond();
  CHECK(m3.size() == 5);
  CHECK(m3.bottom() == 0);
  CHECK(m3.top() == 4);
  CHECK(m3.length() == 2);
  CHECK(m3.covers().size() == 6);
  CHECK(m3.meet(1, 2) == 0);
  CHECK(m3.join(1, 2) == 4);
  CHECK(m3.height(2) == 1);
  CHECK(m3.label(4) == "1");
  CHECK(m3.upper_covers(0) == std::vector<int>{1, 2, 3});
  CHECK(m3.lower_covers(4) == std::vector<int>{1, 2, 3});
}

TEST_CASE("property trio separates the standard examples") {
  const FiniteLattice m3 = diamond();
  CHECK(m3.is_semimodular());
  CHECK_FALSE(m3.is_meet_semidistributive());
  CHECK_FALSE(m3.is_join_distributive());

  const FiniteLattice n5 = pentagon();
  CHECK_FALSE(n5.is_semimodular());
  const auto violation = n5.semimodularity_violation();
  REQUIRE(violation.has_value());
  const auto [a, b] = *violation;
  CHECK(n5.covers_pair(n5.meet(a, b), a));
  CHECK_FALSE(n5.covers_pair(b, n5.join(a, b)));

  const FiniteLattice b3 = cube();
  CHECK(b3.is_semimodular());
  CHECK(b3.is_meet_semidistributive());
  CHECK(b3.is_join_distributive());

  CHECK(chain(5).is_join_distributive());
}

TEST_CASE("irreducibles and width") {
  const FiniteLattice b3 = cube();
  CHECK(b3.join_irreducibles() == std::vector<int>{1, 2, 3});
  CHECK(b3.meet_irreducibles() == std::vector<int>{4, 5, 6});
  CHECK(b3.join_width() == 3);

  const FiniteLattice c = chain(5);
  CHECK(c.join_irreducibles() == std::vector<int>{1, 2, 3, 4});
  CHECK(c.join_width() == 1);

  CHECK(diamond().join_width() == 3);
  CHECK(square().join_width() == 2);
}

TEST_CASE("upstar and intervals") {
  const FiniteLattice b2 = square();
  CHECK(b2.upstar(0) == 3);
  CHECK(b2.upstar(1) == 3);
  CHECK_THROWS_AS(b2.upstar(3), std::domain_error);

  const FiniteLattice b3 = cube();
  const FiniteLattice face = b3.interval(1, 7);
  CHECK(face.size() == 4);
  CHECK(face.length() == 2);
  CHECK_THROWS_AS(b3.interval(1, 2), std::domain_error);
}

TEST_CASE("maximal chains") {
  CHECK(chain(5).maximal_chains().size() == 1);
  CHECK(square().maximal_chains().size() == 2);
  const auto cube_chains = cube().maximal_chains();
  CHECK(cube_chains.size() == 6);
  for (const std::vector<int>& path : cube_chains) {
    CHECK(path.size() == 4);  // semimodular: all maximal chains share a length
    CHECK(path.front() == 0);
    CHECK(path.back() == 7);
  }

  int seen = 0;
  cube().for_each_maximal_chain([&seen](const std::vector<int>&) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("order validation") {
  using Row = std::vector<bool>;
  // Not transitive: 0<1, 1<2 without 0<2.
  CHECK_THROWS_AS(FiniteLattice::from_order({Row{true, true, false}, Row{false, true, true},
                                             Row{false, false, true}}),
                  std::invalid_argument);
  // Not antisymmetric.
  CHECK_THROWS_AS(FiniteLattice::from_order({Row{true, true}, Row{true, true}}),
                  std::invalid_argument);
  // Two maximal elements: no join.
  CHECK_THROWS_AS(FiniteLattice::from_order({Row{true, true, true}, Row{false, true, false},
                                             Row{false, false, true}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteLattice::from_covers(3, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteLattice::from_covers(2, {{0, 1}}, {"just one label"}),
                  std::invalid_argument);
}

TEST_CASE("isomorphism search") {
  const FiniteLattice b2 = square();
  const FiniteLattice b2_relabeled = FiniteLattice::from_covers(
      4, {{3, 1}, {3, 2}, {1, 0}, {2, 0}}, {"top", "left", "right", "bottom"});
  const auto map = find_isomorphism(b2, b2_relabeled);
  REQUIRE(map.has_value());
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(b2.leq(x, y) == b2_relabeled.leq((*map)[static_cast<std::size_t>(x)],
                                             (*map)[static_cast<std::size_t>(y)]));
    }
  }

  CHECK_FALSE(find_isomorphism(b2, chain(4)).has_value());
  CHECK_FALSE(find_isomorphism(diamond(), pentagon()).has_value());
  CHECK(find_isomorphism(diamond(), diamond()).has_value());
}

TEST_CASE("relabeling keeps the order") {
  const FiniteLattice b2 = square();
  const FiniteLattice named = b2.with_labels({"00", "10", "01", "11"});
  CHECK(named.label(3) == "11");
  CHECK(named.covers() == b2.covers());
  CHECK_THROWS_AS(b2.with_labels({"too", "few"}), std::invalid_argument);
}
