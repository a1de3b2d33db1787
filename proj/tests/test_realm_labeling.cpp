#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "togglekit/labeling.hpp"
#include "togglekit/random_gen.hpp"
#include "togglekit/rational.hpp"

using namespace togglekit;

TEST_CASE("exact rational parsing and printing") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-5") == rat(-5));
  CHECK(parse_rat("6/4") == rat(3, 2));  // canonicalized
  CHECK(rat_str(rat(3, 2)) == "3/2");
  CHECK(rat_str(rat(-7)) == "-7");
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("realm operations: tropical pair") {
  SUBCASE("PL uses (max, +) with min as the dual combine") {
    CHECK(down_combine(Realm::PL, rat(1, 2), rat(1, 3)) == rat(1, 2));
    CHECK(up_combine(Realm::PL, rat(1, 2), rat(1, 3)) == rat(1, 3));
    CHECK(compose_op(Realm::PL, rat(1, 2), rat(1, 3)) == rat(5, 6));
    CHECK(invert_against(Realm::PL, rat(1, 2), rat(1, 3)) == rat(1, 6));
    CHECK(empty_up_unit(Realm::PL) == 1);
    CHECK(empty_down_unit(Realm::PL) == 0);
  }
  SUBCASE("birational uses (+, *) with parallel sum as the dual combine") {
    CHECK(down_combine(Realm::Birational, rat(1, 2), rat(1, 3)) == rat(5, 6));
    CHECK(up_combine(Realm::Birational, rat(1, 2), rat(1, 3)) == rat(1, 5));
    CHECK(compose_op(Realm::Birational, rat(2, 3), rat(3, 5)) == rat(2, 5));
    CHECK(invert_against(Realm::Birational, rat(2, 3), rat(1, 6)) == rat(4));
    CHECK_THROWS_AS(invert_against(Realm::Birational, rat(1), rat(0)), std::domain_error);
    CHECK(empty_up_unit(Realm::Birational) == 1);
    CHECK(empty_down_unit(Realm::Birational) == 1);
  }
  SUBCASE("names round-trip") {
    CHECK(parse_realm(realm_str(Realm::PL)) == Realm::PL);
    CHECK(parse_realm(realm_str(Realm::Birational)) == Realm::Birational);
    CHECK_THROWS_AS(parse_realm("tropical"), std::invalid_argument);
  }
}

TEST_CASE("labeling construction and access") {
  Labeling x(RectShape{2, 3}, Realm::PL);
  CHECK(x.at({1, 1}) == 0);
  Labeling y(RectShape{2, 3}, Realm::Birational);
  CHECK(y.at({2, 3}) == 1);
  x.at({2, 3}) = rat(7, 2);
  CHECK(x.at({2, 3}) == rat(7, 2));
  CHECK_THROWS_AS(x.at({3, 1}), std::out_of_range);

  auto z = Labeling::from_rows(Realm::PL, {{rat(1), rat(2)}, {rat(3), rat(4)}});
  CHECK(z.shape() == RectShape{2, 2});
  CHECK(z.at({2, 1}) == 3);
  CHECK_THROWS_AS(Labeling::from_rows(Realm::PL, {{rat(1)}, {rat(1), rat(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Labeling::from_rows(Realm::Birational, {{rat(0)}}), std::invalid_argument);
}

TEST_CASE("stacking splices rows over a common column count") {
  auto top = Labeling::from_rows(Realm::PL, {{rat(1), rat(2)}});
  auto bottom = Labeling::from_rows(Realm::PL, {{rat(3), rat(4)}, {rat(5), rat(6)}});
  auto both = stack(top, bottom);
  CHECK(both.shape() == RectShape{3, 2});
  CHECK(both.at({1, 1}) == 1);
  CHECK(both.at({2, 2}) == 4);
  CHECK(both.at({3, 1}) == 5);
  auto wide = Labeling::from_rows(Realm::PL, {{rat(1), rat(2), rat(3)}});
  CHECK_THROWS_AS(stack(top, wide), std::invalid_argument);
  auto bir = Labeling::from_rows(Realm::Birational, {{rat(1), rat(1)}});
  CHECK_THROWS_AS(stack(top, bir), std::invalid_argument);
}

TEST_CASE("dual star reverses both axes") {
  auto x = Labeling::from_rows(Realm::PL, {{rat(1), rat(2), rat(3)}, {rat(4), rat(5), rat(6)}});
  auto y = dual_star(x);
  CHECK(y.shape() == x.shape());
  CHECK(y.at({1, 1}) == 6);
  CHECK(y.at({1, 3}) == 4);
  CHECK(y.at({2, 1}) == 3);
  CHECK(dual_star(y) == x);
}

TEST_CASE("transpose swaps coordinates") {
  auto x = Labeling::from_rows(Realm::PL, {{rat(1), rat(2), rat(3)}, {rat(4), rat(5), rat(6)}});
  auto t = transpose_of(x);
  CHECK(t.shape() == RectShape{3, 2});
  CHECK(t.at({3, 1}) == 3);
  CHECK(t.at({1, 2}) == 4);
  CHECK(transpose_of(t) == x);
}

TEST_CASE("projection keeps the lower-left block") {
  auto x = Labeling::from_rows(Realm::PL, {{rat(1), rat(2), rat(3)}, {rat(4), rat(5), rat(6)}});
  auto p = project(x, 1, 2);
  CHECK(p.shape() == RectShape{1, 2});
  CHECK(p.at({1, 1}) == 1);
  CHECK(p.at({1, 2}) == 2);
  CHECK_THROWS_AS(project(x, 3, 1), std::invalid_argument);
}

TEST_CASE("filter indicators") {
  auto good = Labeling::from_rows(Realm::PL, {{rat(0), rat(1)}, {rat(1), rat(1)}});
  CHECK(is_filter_indicator(good));
  auto not01 = Labeling::from_rows(Realm::PL, {{rat(0), rat(2)}, {rat(1), rat(1)}});
  CHECK_FALSE(is_filter_indicator(not01));
  auto not_closed = Labeling::from_rows(Realm::PL, {{rat(1), rat(0)}, {rat(0), rat(1)}});
  CHECK_FALSE(is_filter_indicator(not_closed));
  for (uint64_t t = 0; t < 50; ++t)
    CHECK(is_filter_indicator(random_filter_indicator(RectShape{3, 4}, split_seed(11, t))));
}

TEST_CASE("random labelings are deterministic in the seed and realm-valid") {
  auto a = random_labeling(RectShape{3, 3}, Realm::Birational, 42);
  auto b = random_labeling(RectShape{3, 3}, Realm::Birational, 42);
  auto c = random_labeling(RectShape{3, 3}, Realm::Birational, 43);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.positive());
}
