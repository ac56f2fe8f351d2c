#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "jdlat/perm.hpp"

using jdlat::compose;
using jdlat::Permutation;
using jdlat::PermTuple;
using jdlat::TransitionTable;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(image);
}

}  // namespace

TEST_CASE("identity and one-line round trip") {
  const Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);
  CHECK(id.one_line() == std::vector<int>{1, 2, 3, 4});

  const Permutation p = Permutation::from_one_line({3, 2, 4, 1});
  CHECK_FALSE(p.is_identity());
  CHECK(p.one_line() == std::vector<int>{3, 2, 4, 1});
  CHECK(Permutation::from_one_line(p.one_line()) == p);
}

TEST_CASE("one-line validation") {
  CHECK_THROWS_AS(Permutation::from_one_line({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 3}), std::invalid_argument);
}

TEST_CASE("inverse cancels") {
  const Permutation p = Permutation::from_one_line({4, 2, 1, 3});
  CHECK(p.inverse().one_line() == std::vector<int>{3, 2, 4, 1});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());

  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    const Permutation q = random_permutation(n, rng);
    CHECK(compose(q, q.inverse()).is_identity());
    CHECK(q.inverse().inverse() == q);
  }
}

TEST_CASE("composition applies right factor first") {
  const Permutation f = Permutation::from_one_line({3, 2, 4, 1});
  const Permutation g = Permutation::from_one_line({4, 2, 1, 3});
  // f(g^{-1}(x)) one position at a time: 1->3->4, 2->2->2, 3->4->1, 4->1->3.
  CHECK(compose(f, g.inverse()).one_line() == std::vector<int>{4, 2, 1, 3});
  CHECK(compose(Permutation::identity(4), f) == f);
  CHECK(compose(f, Permutation::identity(4)) == f);
  CHECK_THROWS_AS(compose(f, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("tuple shape and member access") {
  const PermTuple tuple(4, {Permutation::from_one_line({3, 2, 4, 1}),
                            Permutation::from_one_line({4, 2, 1, 3})});
  CHECK(tuple.degree() == 4);
  CHECK(tuple.chain_count() == 3);
  CHECK(tuple.member(1).is_identity());
  CHECK(tuple.member(2).one_line() == std::vector<int>{3, 2, 4, 1});
  CHECK(tuple.member(3).one_line() == std::vector<int>{4, 2, 1, 3});

  const PermTuple inv = tuple.inversed();
  CHECK(inv.member(2) == tuple.member(2).inverse());
  CHECK(inv.member(3) == tuple.member(3).inverse());
  CHECK(inv.inversed() == tuple);
}

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(PermTuple(4, {}), std::invalid_argument);
  CHECK_THROWS_AS(PermTuple(4, {Permutation::identity(3)}), std::invalid_argument);
  CHECK_THROWS_AS(PermTuple(4, {Permutation::identity(4), Permutation::identity(5)}),
                  std::invalid_argument);
}

TEST_CASE("transition table identities") {
  const PermTuple tuple(4, {Permutation::from_one_line({4, 2, 1, 3}),
                            Permutation::from_one_line({3, 2, 4, 1})});
  const TransitionTable table(tuple);
  // Frozen hand-computed case: the transition from chain 2 to chain 3.
  CHECK(table.between(2, 3).one_line() == std::vector<int>{4, 2, 1, 3});
  CHECK(table.between(1, 2) == tuple.member(2));
  CHECK(table.between(2, 1) == tuple.member(2).inverse());

  std::mt19937_64 rng(99);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= 5; ++k) {
      std::vector<Permutation> members;
      for (int i = 1; i < k; ++i) {
        members.push_back(random_permutation(n, rng));
      }
      const PermTuple t(n, members);
      const TransitionTable tt(t);
      for (int i = 1; i <= k; ++i) {
        CHECK(tt.between(i, i).is_identity());
        for (int j = 1; j <= k; ++j) {
          CHECK(tt.between(j, i) == tt.between(i, j).inverse());
          for (int l = 1; l <= k; ++l) {
            CHECK(compose(tt.between(j, l), tt.between(i, j)) == tt.between(i, l));
          }
        }
      }
    }
  }
}
