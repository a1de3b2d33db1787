#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "togglekit/poset.hpp"

using namespace togglekit;

TEST_CASE("coordinate order, files, ranks") {
  CHECK(coord_leq({1, 1}, {2, 3}));
  CHECK(coord_leq({2, 3}, {2, 3}));
  CHECK_FALSE(coord_leq({2, 1}, {1, 3}));
  CHECK_FALSE(coord_leq({1, 3}, {2, 1}));  // incomparable both ways
  CHECK(file_of({3, 1}) == 2);
  CHECK(file_of({1, 3}) == -2);
  CHECK(rank_of({2, 3}) == 5);
}

TEST_CASE("rectangle cells and membership") {
  RectShape sh{2, 3};
  CHECK(sh.cells().size() == 6);
  CHECK(sh.contains({2, 3}));
  CHECK_FALSE(sh.contains({3, 1}));
  CHECK_FALSE(sh.contains({0, 1}));
  CHECK(sh.transposed() == RectShape{3, 2});
}

TEST_CASE("cover relations stay inside the rectangle") {
  RectShape sh{2, 2};
  auto above = covers_above(sh, {1, 1});
  REQUIRE(above.size() == 2);
  CHECK(std::count(above.begin(), above.end(), RectCoord{2, 1}) == 1);
  CHECK(std::count(above.begin(), above.end(), RectCoord{1, 2}) == 1);
  CHECK(covers_above(sh, {2, 2}).empty());
  auto below = covers_below(sh, {2, 2});
  REQUIRE(below.size() == 2);
  CHECK(covers_below(sh, {1, 1}).empty());
}

TEST_CASE("cover relations are each other's converses") {
  RectShape sh{3, 4};
  for (RectCoord p : sh.cells())
    for (RectCoord q : covers_above(sh, p)) {
      auto back = covers_below(sh, q);
      CHECK(std::count(back.begin(), back.end(), p) == 1);
    }
}

TEST_CASE("region resolution") {
  RectShape sh{3, 4};

  SUBCASE("full") {
    CHECK(resolve_region(sh, Region::full()).size() == 12);
  }
  SUBCASE("up-diagonal fixes i") {
    auto cells = resolve_region(sh, Region::up_diagonal(2));
    REQUIRE(cells.size() == 4);
    for (RectCoord p : cells) CHECK(p.i == 2);
  }
  SUBCASE("down-diagonal fixes j") {
    auto cells = resolve_region(sh, Region::down_diagonal(3));
    REQUIRE(cells.size() == 3);
    for (RectCoord p : cells) CHECK(p.j == 3);
  }
  SUBCASE("rank") {
    auto cells = resolve_region(sh, Region::rank(4));
    REQUIRE(cells.size() == 3);  // (1,3),(2,2),(3,1)
    for (RectCoord p : cells) CHECK(p.i + p.j == 4);
  }
  SUBCASE("file") {
    auto cells = resolve_region(sh, Region::file(-1));
    REQUIRE(cells.size() == 3);  // (1,2),(2,3),(3,4)
    for (RectCoord p : cells) CHECK(p.i - p.j == -1);
    CHECK(resolve_region(sh, Region::file(2)).size() == 1);  // only (3,1)
    CHECK(resolve_region(sh, Region::file(5)).empty());
  }
  SUBCASE("principal ideal") {
    auto cells = resolve_region(sh, Region::principal_ideal({2, 3}));
    REQUIRE(cells.size() == 6);
    for (RectCoord p : cells) CHECK(coord_leq(p, {2, 3}));
  }
  SUBCASE("ideal of several generators is their union of ideals") {
    auto cells = resolve_region(sh, Region::ideal_of({{1, 4}, {3, 1}}));
    std::set<RectCoord> got(cells.begin(), cells.end());
    std::set<RectCoord> want;
    for (RectCoord p : sh.cells())
      if (coord_leq(p, {1, 4}) || coord_leq(p, {3, 1})) want.insert(p);
    CHECK(got == want);
  }
  SUBCASE("explicit sets are deduplicated and sorted") {
    auto cells = resolve_region(sh, Region::explicit_set({{2, 2}, {1, 1}, {2, 2}}));
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == RectCoord{1, 1});
    CHECK(cells[1] == RectCoord{2, 2});
  }
  SUBCASE("out-of-bounds cells are rejected") {
    CHECK_THROWS_AS(resolve_region(sh, Region::principal_ideal({4, 1})), std::out_of_range);
    CHECK_THROWS_AS(resolve_region(sh, Region::explicit_set({{0, 2}})), std::out_of_range);
  }
}

TEST_CASE("linear extension: descending rank, ties by ascending column") {
  RectShape sh{2, 2};
  auto order = linear_extension(sh, resolve_region(sh, Region::full()));
  REQUIRE(order.size() == 4);
  CHECK(order[0] == RectCoord{2, 2});
  CHECK(order[1] == RectCoord{2, 1});
  CHECK(order[2] == RectCoord{1, 2});
  CHECK(order[3] == RectCoord{1, 1});
}

TEST_CASE("linear extension respects the order on any region") {
  RectShape sh{3, 3};
  auto order = linear_extension(sh, resolve_region(sh, Region::ideal_of({{2, 3}, {3, 2}})));
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = a + 1; b < order.size(); ++b)
      CHECK_FALSE((coord_leq(order[a], order[b]) && order[a] != order[b]));
}

TEST_CASE("region formatting round-trips the intent") {
  CHECK(region_str(Region::principal_ideal({3, 2})) == "ideal=(3,2)");
  CHECK(region_str(Region::file(1)) == "file=1");
  CHECK(region_str(Region::full()) == "full");
}
