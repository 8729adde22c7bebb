#include "vfree/finite_group.hpp"

#include <set>

#include "doctest.h"

using namespace vfree;

TEST_CASE("cyclic shorthand") {
  auto c2 = finite_group::cyclic(2);
  CHECK(c2.order() == 2);
  CHECK(c2.name(1) == "g");
  CHECK(c2.mul(1, 1) == 0);

  auto c4 = finite_group::cyclic(4);
  CHECK(c4.mul(c4.mul(2, 2), 0) == 0);  // g2 * g2 = 1
  CHECK(c4.inv(1) == 3);
}

TEST_CASE("table validation failures") {
  // mult(g, g) = g: no identity behaviour.
  CHECK_THROWS_AS(finite_group::from_table({"1", "g"}, {{0, 1}, {1, 1}}),
                  validation_error);
  // Broken associativity with intact Latin square (smallest example:
  // the order-5 loop that is not a group).
  CHECK_THROWS_AS(finite_group::from_table({"1", "a", "b", "c", "d"},
                                           {{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}}),
                  validation_error);
  CHECK_THROWS_AS(finite_group::from_table({"1"}, {{0, 0}}), spec_error);
}

TEST_CASE("embedding checks") {
  auto c2 = finite_group::cyclic(2);
  auto c4 = finite_group::cyclic(4);

  subgroup_embedding good{&c2, &c4, {0, 2}};  // g -> g2
  CHECK(!check_embedding(good));

  subgroup_embedding bad{&c2, &c4, {0, 1}};  // g -> g, order mismatch
  auto r = check_embedding(bad);
  REQUIRE(r);
  CHECK(r->find("homomorphism") != std::string::npos);

  auto triv = finite_group::trivial();
  subgroup_embedding empty{&triv, &c4, {0}};
  CHECK(!check_embedding(empty));

  // Composition of valid embeddings is valid.
  subgroup_embedding idc4{&c4, &c4, {0, 1, 2, 3}};
  CHECK(!check_embedding(idc4));
  std::vector<int> comp(c2.order());
  for (int i = 0; i < c2.order(); ++i) comp[i] = idc4.map[good.map[i]];
  CHECK(!check_embedding({&c2, &c4, comp}));
}

TEST_CASE("coset partition") {
  auto c4 = finite_group::cyclic(4);
  auto cosets = coset_partition(c4, {0, 2});
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0][0] == 0);               // identity represents the subgroup
  CHECK(c4.name(cosets[1][0]) == "g");    // ShortLex-least of {g, g3}

  auto c2 = finite_group::cyclic(2);
  auto trivial = coset_partition(c2, {0});
  CHECK(trivial.size() == 2);

  auto whole = coset_partition(c4, {0, 1, 2, 3});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0][0] == 0);

  CHECK_THROWS_AS(coset_partition(c4, {0, 1}), validation_error);  // not closed

  // Cells are disjoint, cover the group, and have size |sub|.
  auto c12 = finite_group::cyclic(12);
  auto part = coset_partition(c12, {0, 4, 8});
  std::set<int> all;
  for (const auto& c : part) {
    CHECK(c.size() == 3);
    all.insert(c.begin(), c.end());
  }
  CHECK(all.size() == 12);
}

TEST_CASE("inverse of inverse") {
  auto c6 = finite_group::cyclic(6);
  for (int x = 0; x < c6.order(); ++x) {
    CHECK(c6.inv(c6.inv(x)) == x);
    CHECK(c6.mul(x, c6.inv(x)) == 0);
  }
}
