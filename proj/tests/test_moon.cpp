#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "togglekit/moon.hpp"
#include "togglekit/random_gen.hpp"

using namespace togglekit;

namespace {

// Row intervals, rows listed from i = 1 downward: {j1, j2} per row.
MoonPoly rows_poly(const std::vector<std::pair<int, int>>& rows) {
  std::vector<RectCoord> cells;
  for (size_t t = 0; t < rows.size(); ++t)
    for (int j = rows[t].first; j <= rows[t].second; ++j)
      cells.push_back({static_cast<int>(t) + 1, j});
  return MoonPoly::of(std::move(cells));
}

MoonPoly fig3_shape() { return rows_poly({{1, 3}, {1, 3}, {2, 2}}); }

Filling fig3_filling() {
  std::map<RectCoord, Rat> values;
  for (RectCoord p : fig3_shape().cells) values[p] = Rat(0);
  values[{1, 1}] = 2;
  values[{2, 2}] = 1;
  values[{3, 2}] = 1;
  return Filling::of(fig3_shape(), std::move(values));
}

MoonPoly fig7_shape() { return rows_poly({{1, 2}, {1, 3}, {1, 4}, {1, 4}}); }

// The 16-cell crescent from the moon-polyomino introduction.
MoonPoly crescent16() { return rows_poly({{2, 2}, {2, 4}, {1, 5}, {1, 5}, {2, 3}}); }

Filling random_integer_filling(const MoonPoly& m, uint64_t seed) {
  SplitMix64 g(seed);
  std::map<RectCoord, Rat> values;
  for (RectCoord p : m.cells) values[p] = Rat(static_cast<long>(g.range(0, 9)));
  return Filling::of(m, std::move(values));
}

}  // namespace

TEST_CASE("moon validation accepts the crescent and rejects the counterexamples") {
  CHECK(validate_moon(fig3_shape()).ok);
  CHECK(validate_moon(fig7_shape()).ok);
  CHECK(validate_moon(crescent16()).ok);

  // Disconnected up-diagonal.
  MoonPoly middle = MoonPoly::of({{1, 1}, {1, 2}, {2, 1}, {2, 3}});
  MoonReport mr = validate_moon(middle);
  CHECK_FALSE(mr.ok);
  CHECK(mr.reason == "up-diagonal 2 is not an interval");

  // Intersecting but non-nested row intervals.
  MoonPoly right = MoonPoly::of({{1, 1}, {2, 1}, {2, 2}, {3, 2}});
  MoonReport rr = validate_moon(right);
  CHECK_FALSE(rr.ok);
  CHECK(rr.reason == "up-diagonals 1 and 3 are not nested");
}

TEST_CASE("maximal rectangles of the pinned shapes") {
  auto fig3 = maximal_rectangles(fig3_shape());
  REQUIRE(fig3.size() == 2);
  CHECK(fig3[0] == MaxRect{1, 2, 1, 3});
  CHECK(fig3[1] == MaxRect{1, 3, 2, 2});

  auto fig7 = maximal_rectangles(fig7_shape());
  REQUIRE(fig7.size() == 3);
  CHECK(fig7[0] == MaxRect{1, 4, 1, 2});
  CHECK(fig7[1] == MaxRect{2, 4, 1, 3});
  CHECK(fig7[2] == MaxRect{3, 4, 1, 4});

  auto cres = maximal_rectangles(crescent16());
  REQUIRE(cres.size() == 4);
  CHECK(cres[0] == MaxRect{1, 5, 2, 2});
  CHECK(cres[1] == MaxRect{2, 4, 2, 4});
  CHECK(cres[2] == MaxRect{2, 5, 2, 3});
  CHECK(cres[3] == MaxRect{3, 4, 1, 5});

  auto rect = maximal_rectangles(partition_poly({3, 3}));
  REQUIRE(rect.size() == 1);
  CHECK(rect[0] == MaxRect{1, 2, 1, 3});

  CHECK_THROWS_AS(maximal_rectangles(MoonPoly::of({{1, 1}, {1, 3}})), std::domain_error);
}

TEST_CASE("content shifts move the expected strips") {
  MoonPoly m = crescent16();
  ShiftStep up2{MaxRect{1, 5, 2, 2}, ShiftAxis::UpDiagonals};
  REQUIRE(shift_legal(m, up2));
  MoonPoly m1 = apply_shift(m, up2);
  CHECK(m1 == rows_poly({{2, 4}, {1, 5}, {1, 5}, {2, 3}, {2, 2}}));

  ShiftStep down1{MaxRect{2, 3, 1, 5}, ShiftAxis::DownDiagonals};
  REQUIRE(shift_legal(m1, down1));
  MoonPoly m2 = apply_shift(m1, down1);
  CHECK(m2 == rows_poly({{1, 3}, {1, 5}, {1, 5}, {1, 2}, {1, 1}}));

  // Identity shifts (nothing outside the rectangle strip) are legal.
  MoonPoly square = partition_poly({2, 2});
  ShiftStep ident{MaxRect{1, 2, 1, 2}, ShiftAxis::UpDiagonals};
  CHECK(shift_legal(square, ident));
  CHECK(apply_shift(square, ident) == square);

  // A shift whose image has a non-contiguous down-diagonal is illegal.
  ShiftStep bad{MaxRect{2, 4, 2, 4}, ShiftAxis::DownDiagonals};
  CHECK_FALSE(shift_legal(m, bad));
  CHECK_THROWS_AS(apply_shift(m, bad), std::invalid_argument);

  // Non-maximal rectangles are rejected outright.
  ShiftStep nonmax{MaxRect{2, 3, 2, 3}, ShiftAxis::UpDiagonals};
  CHECK_FALSE(shift_legal(m, nonmax));
}

TEST_CASE("straightening reaches the canonical partition in pinned steps") {
  Straightening fig3 = straighten(fig3_shape());
  CHECK(fig3.lambda == std::vector<int>{3, 3, 1});
  REQUIRE(fig3.steps.size() == 1);
  CHECK(fig3.steps[0] == ShiftStep{MaxRect{1, 2, 1, 3}, ShiftAxis::DownDiagonals});
  CHECK(normalized(fig3.result) == partition_poly({3, 3, 1}));

  Straightening fig7 = straighten(fig7_shape());
  CHECK(fig7.lambda == std::vector<int>{4, 4, 3, 2});
  CHECK(fig7.steps.size() == 2);

  Straightening cres = straighten(crescent16());
  CHECK(cres.lambda == std::vector<int>{5, 5, 3, 2, 1});
  REQUIRE(cres.steps.size() == 3);
  CHECK(cres.steps[0] == ShiftStep{MaxRect{1, 5, 2, 2}, ShiftAxis::UpDiagonals});
  CHECK(cres.steps[1] == ShiftStep{MaxRect{2, 3, 1, 5}, ShiftAxis::DownDiagonals});
  CHECK(cres.steps[2] == ShiftStep{MaxRect{1, 3, 1, 3}, ShiftAxis::UpDiagonals});

  Straightening flat = straighten(partition_poly({4, 2, 1}));
  CHECK(flat.steps.empty());
  CHECK(flat.lambda == std::vector<int>{4, 2, 1});
}

TEST_CASE("equivalence compares canonical partitions, up to translation") {
  CHECK(equivalent(fig3_shape(), partition_poly({3, 3, 1})));
  CHECK(equivalent(crescent16(), partition_poly({5, 5, 3, 2, 1})));
  CHECK(equivalent(fig3_shape(), translated(fig3_shape(), 2, 5)));
  CHECK_FALSE(equivalent(fig3_shape(), fig7_shape()));
}

TEST_CASE("omega shift on the bolded 2x2 rectangle, both pinned instances") {
  // Shape with letters a..h; the maximal rectangle R = [2,3] x [2,3] carries
  // (b e / d f); c and g ride the down shift into column 2.
  MoonPoly m = MoonPoly::of({{3, 1}, {2, 2}, {1, 3}, {3, 2}, {2, 3}, {3, 3}, {4, 3}, {3, 4}});
  REQUIRE(validate_moon(m).ok);
  auto rects = maximal_rectangles(m);
  bool has_r = false;
  for (const MaxRect& rect : rects) has_r = has_r || rect == MaxRect{2, 3, 2, 3};
  REQUIRE(has_r);

  auto build = [&](long b, long d, long e, long f) {
    std::map<RectCoord, Rat> values{{{3, 1}, Rat(10)}, {{1, 3}, Rat(20)}, {{4, 3}, Rat(30)},
                                    {{3, 4}, Rat(40)}, {{2, 2}, Rat(b)},  {{3, 2}, Rat(d)},
                                    {{2, 3}, Rat(e)},  {{3, 3}, Rat(f)}};
    return Filling::of(m, std::move(values));
  };
  ShiftStep step{MaxRect{2, 3, 2, 3}, ShiftAxis::DownDiagonals};
  REQUIRE(shift_legal(m, step));

  Filling y = omega_shift(build(2, 4, 5, 6), step);
  CHECK(y.poly == MoonPoly::of({{3, 1}, {2, 2}, {1, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {3, 4}}));
  CHECK(y.at({2, 2}) == 3);   // B
  CHECK(y.at({3, 2}) == 8);   // D
  CHECK(y.at({2, 3}) == 4);   // E
  CHECK(y.at({3, 3}) == 2);   // F
  CHECK(y.at({1, 2}) == 20);  // c rode the shift
  CHECK(y.at({4, 2}) == 30);  // g rode the shift
  CHECK(y.at({3, 1}) == 10);
  CHECK(y.at({3, 4}) == 40);

  Filling y2 = omega_shift(build(1, 2, 3, 4), step);
  CHECK(y2.at({2, 2}) == 2);
  CHECK(y2.at({3, 2}) == 5);
  CHECK(y2.at({2, 3}) == 2);
  CHECK(y2.at({3, 3}) == 1);
  // B + D = e + f.
  CHECK(y2.at({2, 2}) + y2.at({3, 2}) == Rat(3) + Rat(4));

  // Integer fillings stay integer, and the explicit-source inverse returns.
  CHECK(y.integral());
  CHECK(omega_shift_inverse(y, m, step) == build(2, 4, 5, 6));
}

TEST_CASE("rho shift on a full rectangle is the transfer-conjugated inverse rowmotion") {
  // The [4] x [3] golden pair.
  MoonPoly m = partition_poly({3, 3, 3, 3});
  std::map<RectCoord, Rat> in{
      {{1, 1}, rat(1, 20)}, {{1, 2}, rat(1, 10)}, {{1, 3}, rat(2, 5)},
      {{2, 1}, rat(1, 10)}, {{2, 2}, rat(1, 20)}, {{2, 3}, rat(1, 10)},
      {{3, 1}, rat(1, 5)},  {{3, 2}, rat(1, 20)}, {{3, 3}, rat(1, 4)},
      {{4, 1}, rat(3, 10)}, {{4, 2}, rat(1, 20)}, {{4, 3}, rat(1, 10)}};
  std::map<RectCoord, Rat> expect{
      {{1, 1}, rat(1, 10)}, {{1, 2}, rat(1, 20)}, {{1, 3}, rat(1, 10)},
      {{2, 1}, rat(1, 20)}, {{2, 2}, rat(1, 5)},  {{2, 3}, rat(1, 4)},
      {{3, 1}, rat(1, 20)}, {{3, 2}, rat(3, 10)}, {{3, 3}, rat(1, 10)},
      {{4, 1}, rat(1, 20)}, {{4, 2}, rat(3, 10)}, {{4, 3}, rat(0)}};
  Filling x = Filling::of(m, std::move(in));
  MaxRect rect{1, 4, 1, 3};
  Filling y = rho_shift(x, rect);
  CHECK(y == Filling::of(m, std::move(expect)));
  CHECK(rho_shift_inverse(y, m, rect) == x);
}

TEST_CASE("omega path: identity, round trip, and rejection of inequivalent targets") {
  MoonPoly m = fig3_shape();
  Filling x = fig3_filling();
  CHECK(omega_path(x, m) == x);

  MoonPoly target = partition_poly({3, 3, 1});
  Filling y = omega_path(x, target);
  CHECK(y.poly == target);
  CHECK(omega_path(y, m) == x);

  CHECK_THROWS_AS(omega_path(x, fig7_shape()), std::invalid_argument);
}

TEST_CASE("omega path is route independent on the crescent") {
  MoonPoly m = crescent16();
  MoonPoly target = partition_poly({5, 5, 3, 2, 1});

  // The alternative pictured route.
  std::vector<ShiftStep> route = {{MaxRect{3, 4, 1, 5}, ShiftAxis::DownDiagonals},
                                  {MaxRect{2, 4, 1, 3}, ShiftAxis::UpDiagonals},
                                  {MaxRect{1, 5, 1, 1}, ShiftAxis::UpDiagonals}};
  for (uint64_t t = 0; t < 30; ++t) {
    Filling x = random_integer_filling(m, split_seed(601, t));
    Filling via_route = x;
    for (const ShiftStep& step : route) {
      REQUIRE(shift_legal(via_route.poly, step));
      via_route = omega_shift(via_route, step);
    }
    REQUIRE(via_route.poly == target);
    CHECK(omega_path(x, target) == via_route);
  }
}

TEST_CASE("transport preserves per-rectangle statistics and the SE statistic") {
  MoonPoly m = fig3_shape();
  MoonPoly target = partition_poly({3, 3, 1});
  for (uint64_t t = 0; t < 25; ++t) {
    Filling x = random_integer_filling(m, split_seed(602, t));
    Filling y = omega_path(x, target);
    CHECK(rect_chain_max(x, MaxRect{1, 2, 1, 3}, 1) == rect_chain_max(y, MaxRect{1, 2, 1, 3}, 1));
    CHECK(rect_chain_max(x, MaxRect{1, 2, 1, 3}, 2) == rect_chain_max(y, MaxRect{1, 2, 1, 3}, 2));
    CHECK(rect_chain_max(x, MaxRect{1, 3, 2, 2}, 1) == rect_chain_max(y, MaxRect{1, 3, 1, 1}, 1));
    CHECK(se_chain_max(x) == se_chain_max(y));
    CHECK(ne_chain_max(x, 1) == ne_chain_max(y, 1));
  }
}

TEST_CASE("pinned chain statistics of the example filling") {
  Filling x = fig3_filling();
  CHECK(ne_chain_max(x, 1) == 3);
  CHECK(se_chain_max(x) == 1);

  std::map<RectCoord, Rat> zero;
  for (RectCoord p : fig3_shape().cells) zero[p] = Rat(0);
  Filling z = Filling::of(fig3_shape(), std::move(zero));
  CHECK(ne_chain_max(z, 1) == 0);
  CHECK(se_chain_max(z) == 0);

  CHECK(ne_chain_max(x, 0) == 0);
  CHECK_THROWS_AS(ne_chain_max(x, -1), std::invalid_argument);
  std::map<RectCoord, Rat> neg{{{1, 1}, Rat(-1)}};
  Filling nf = Filling::of(MoonPoly::of({{1, 1}}), std::move(neg));
  CHECK_THROWS_AS(ne_chain_max(nf, 1), std::domain_error);
}

TEST_CASE("SE chains run strictly southeast through nonzero cells") {
  MoonPoly square = partition_poly({3, 3, 3});
  std::map<RectCoord, Rat> anti;
  for (RectCoord p : square.cells) anti[p] = (p.i + p.j == 4) ? Rat(1) : Rat(0);
  CHECK(se_chain_max(Filling::of(square, std::move(anti))) == 3);

  // On a single rectangle the NE statistic delegates to the window DP.
  for (uint64_t t = 0; t < 10; ++t) {
    Filling x = random_integer_filling(square, split_seed(603, t));
    CHECK(ne_chain_max(x, 2) == rect_chain_max(x, MaxRect{1, 3, 1, 3}, 2));
  }
}

TEST_CASE("rectangle maps on distinct maximal rectangles commute (pinned pair)") {
  MoonPoly m = crescent16();
  MaxRect r1{3, 4, 1, 5}, r2{1, 5, 2, 2};
  for (RectMapKind k1 : {RectMapKind::OmegaP, RectMapKind::OmegaQ, RectMapKind::RhoBoth})
    for (RectMapKind k2 : {RectMapKind::OmegaP, RectMapKind::OmegaQ, RectMapKind::RhoBoth})
      for (uint64_t t = 0; t < 4; ++t) {
        Filling x = random_integer_filling(m, split_seed(604, 100 * t));
        Filling a = rect_map_shift(x, r1, k1);
        auto a_rects = maximal_rectangles(a.poly);
        MaxRect r2a{0, 0, 0, 0};
        for (const MaxRect& rect : a_rects)
          if (rect.height() == r2.height() && rect.width() == r2.width()) r2a = rect;
        Filling ab = rect_map_shift(a, r2a, k2);

        Filling b = rect_map_shift(x, r2, k2);
        auto b_rects = maximal_rectangles(b.poly);
        MaxRect r1b{0, 0, 0, 0};
        for (const MaxRect& rect : b_rects)
          if (rect.height() == r1.height() && rect.width() == r1.width()) r1b = rect;
        Filling ba = rect_map_shift(b, r1b, k1);

        CHECK(ab == ba);
      }
}

TEST_CASE("filling construction validates its support") {
  MoonPoly m = fig3_shape();
  std::map<RectCoord, Rat> missing{{{1, 1}, Rat(1)}};
  CHECK_THROWS_AS(Filling::of(m, std::move(missing)), std::invalid_argument);
  std::map<RectCoord, Rat> extra;
  for (RectCoord p : m.cells) extra[p] = Rat(0);
  extra[{9, 9}] = Rat(1);
  CHECK_THROWS_AS(Filling::of(m, std::move(extra)), std::invalid_argument);
  CHECK_THROWS_AS(fig3_filling().at({3, 3}), std::out_of_range);
  CHECK_THROWS_AS(rect_chain_max(fig3_filling(), MaxRect{1, 3, 1, 3}, 1), std::domain_error);
}
