#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hss/error.hpp"
#include "hss/group.hpp"

using namespace hss;

TEST_CASE("cyclic factors determine rank and order") {
  const FiniteAbelianGroup g = make_group({2, 3});
  CHECK(g.rank() == 2);
  CHECK(g.order() == 6);
  CHECK(g.orders() == std::vector<long>{2, 3});
  CHECK(g.identity().residues == std::vector<long>{0, 0});
}

TEST_CASE("trivial group has exactly the empty element") {
  const FiniteAbelianGroup g = trivial_group();
  CHECK(g.rank() == 0);
  CHECK(g.order() == 1);
  const auto all = g.enumerate();
  REQUIRE(all.size() == 1);
  CHECK(all[0].residues.empty());
  CHECK(g.contains(g.identity()));
}

TEST_CASE("enumerate lists elements in lexicographic residue order") {
  const FiniteAbelianGroup g = make_group({2, 3});
  const auto all = g.enumerate();
  REQUIRE(all.size() == 6);
  CHECK(all[0].residues == std::vector<long>{0, 0});
  CHECK(all[1].residues == std::vector<long>{0, 1});
  CHECK(all[2].residues == std::vector<long>{0, 2});
  CHECK(all[3].residues == std::vector<long>{1, 0});
  CHECK(all[5].residues == std::vector<long>{1, 2});
}

TEST_CASE("group operation wraps per factor") {
  const FiniteAbelianGroup g = make_group({2, 3});
  const GroupElement a{{1, 2}};
  const GroupElement b{{1, 2}};
  CHECK(g.op(a, b).residues == std::vector<long>{0, 1});
  CHECK(g.inv(a).residues == std::vector<long>{1, 1});
  CHECK(g.op(a, g.inv(a)) == g.identity());
}

TEST_CASE("reduce maps arbitrary residues into range") {
  const FiniteAbelianGroup g = make_group({4});
  CHECK(g.reduce({7}).residues == std::vector<long>{3});
  CHECK(g.reduce({-1}).residues == std::vector<long>{3});
  CHECK(g.reduce({-8}).residues == std::vector<long>{0});
}

TEST_CASE("non-positive factor orders are rejected") {
  CHECK_THROWS_AS(make_group({0}), Error);
  CHECK_THROWS_AS(make_group({3, -2}), Error);
  try {
    make_group({0});
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NonPositiveOrder);
  }
}

TEST_CASE("rank mismatches are rejected as group mismatch") {
  const FiniteAbelianGroup g = make_group({2, 3});
  const GroupElement wrong{{1}};
  CHECK_THROWS_AS(g.op(wrong, g.identity()), Error);
  try {
    g.reduce({1, 2, 3});
  } catch (const Error& e) {
    CHECK(e.kind() == Err::GroupMismatch);
  }
}

TEST_CASE("order-one factors are legal and collapse to the identity") {
  const FiniteAbelianGroup g = make_group({1, 5});
  CHECK(g.order() == 5);
  CHECK(g.reduce({3, 7}).residues == std::vector<long>{0, 2});
}

TEST_CASE("groups compare by their factor orders") {
  CHECK(make_group({2, 3}) == make_group({2, 3}));
  CHECK(!(make_group({2, 3}) == make_group({3, 2})));
  CHECK(!(make_group({2}) == trivial_group()));
}
