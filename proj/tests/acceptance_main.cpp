// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "togglekit/chain_stats.hpp"
#include "togglekit/ehrhart.hpp"
#include "togglekit/moon.hpp"
#include "togglekit/random_gen.hpp"
#include "togglekit/tableau_maps.hpp"
#include "togglekit/toggles.hpp"
#include "togglekit/verify.hpp"

using namespace togglekit;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Labeling fig4_input() {
  return Labeling::from_rows(Realm::PL, {{2, 1, 0}, {0, 0, 1}, {1, 0, 1}});
}

Labeling fig2_input() {
  return Labeling::from_rows(Realm::PL, {{rat(1, 20), rat(1, 10), rat(2, 5)},
                                         {rat(1, 10), rat(1, 20), rat(1, 10)},
                                         {rat(1, 5), rat(1, 20), rat(1, 4)},
                                         {rat(3, 10), rat(1, 20), rat(1, 10)}});
}

MoonPoly rows_poly(const std::vector<std::pair<int, int>>& rows) {
  std::vector<RectCoord> cells;
  for (size_t t = 0; t < rows.size(); ++t)
    for (int j = rows[t].first; j <= rows[t].second; ++j)
      cells.push_back({static_cast<int>(t) + 1, j});
  return MoonPoly::of(std::move(cells));
}

MoonPoly fig3_shape() { return rows_poly({{1, 3}, {1, 3}, {2, 2}}); }
MoonPoly fig7_shape() { return rows_poly({{1, 2}, {1, 3}, {1, 4}, {1, 4}}); }
MoonPoly crescent16() { return rows_poly({{2, 2}, {2, 4}, {1, 5}, {1, 5}, {2, 3}}); }

Filling fig3_filling() {
  std::map<RectCoord, Rat> values;
  for (RectCoord p : fig3_shape().cells) values[p] = Rat(0);
  values[{1, 1}] = 2;
  values[{2, 2}] = 1;
  values[{3, 2}] = 1;
  return Filling::of(fig3_shape(), std::move(values));
}

Filling random_integer_filling(const MoonPoly& m, uint64_t seed) {
  SplitMix64 g(seed);
  std::map<RectCoord, Rat> values;
  for (RectCoord p : m.cells) values[p] = Rat(static_cast<long>(g.range(0, 9)));
  return Filling::of(m, std::move(values));
}

MaxRect rect_with_dims(const MoonPoly& m, int height, int width) {
  for (const MaxRect& rect : maximal_rectangles(m))
    if (rect.height() == height && rect.width() == width) return rect;
  throw std::logic_error("no maximal rectangle with the requested dimensions");
}

std::string serialize(const Filling& x) {
  std::string out;
  for (RectCoord p : x.poly.cells) out += rat_str(x.at(p)) + ";";
  return out;
}

// --- criteria -------------------------------------------------------------

bool criterion1(std::string& detail) {
  Labeling x = fig4_input();
  (void)pro_full(rsk(x), Side::P);  // warm up
  auto t0 = Clock::now();
  Labeling p = rsk(x);
  Labeling q = pro_full(p, Side::P);
  double elapsed = ms_since(t0);
  bool ok = p == Labeling::from_rows(Realm::PL, {{0, 0, 3}, {1, 1, 4}, {3, 3, 5}}) &&
            q == Labeling::from_rows(Realm::PL, {{0, 0, 3}, {0, 1, 4}, {1, 3, 5}}) &&
            elapsed < 1.0;
  std::ostringstream s;
  s << "rsk and promotion golden triple (" << elapsed << " ms)";
  detail = s.str();
  return ok;
}

bool criterion2(std::string& detail) {
  Labeling x = fig4_input();
  PathFamilySpec one{1, 1, 3, 3, 1}, two{1, 1, 3, 3, 2};
  bool ok = max_weight(x, one) == 5 && max_weight(x, two) == 6 &&
            brute_force_max_weight(x, one) == 5 && brute_force_max_weight(x, two) == 6;
  detail = "Greene window values 5 and 6, DP and oracle";
  return ok;
}

bool criterion3(std::string& detail) {
  Labeling x = fig2_input();
  Labeling y = transfer(rowmotion(transfer_inverse(x), Region::full(), true));
  Labeling expected =
      Labeling::from_rows(Realm::PL, {{rat(1, 10), rat(1, 20), rat(1, 10)},
                                      {rat(1, 20), rat(1, 5), rat(1, 4)},
                                      {rat(1, 20), rat(3, 10), rat(1, 10)},
                                      {rat(1, 20), rat(3, 10), rat(0)}});
  bool ok = y == expected && max_weight(x, PathFamilySpec{2, 1, 4, 3, 2}) == rat(23, 20) &&
            max_weight(y, PathFamilySpec{1, 1, 3, 3, 2}) == rat(23, 20);
  detail = "rowmotion golden pair with matched 23/20 chain weights";
  return ok;
}

bool criterion4(std::string& detail) {
  const std::vector<std::string> suites = {
      "toggle-involution", "toggle-commutation",   "phi-roundtrip",
      "rsk-roundtrip",     "chain-shifting",       "proid-rsk",
      "rsk-cancellation",  "double-rsk",           "shifts-one-direction",
      "same-p-tableaux",   "omega-uniqueness",     "evac-involution",
      "evac-rotation",     "evac-chain-shifting",  "swpro-factorization",
      "swpro-conjugacy",   "e-maps",               "swpro-chain-shifting",
      "plactic"};
  auto t0 = Clock::now();
  bool ok = true;
  std::string first_failure;
  int min_trials = 1 << 30;
  for (const std::string& suite : suites) {
    int total = 0;
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s) {
        VerifyOptions opt;
        opt.trials = 13;
        opt.seed = 40000 + static_cast<uint64_t>(100 * r + s);
        opt.r = r;
        opt.s = s;
        VerifyResult result = run_verify(suite, opt);
        total += result.trials_run;
        if (!result.ok && first_failure.empty())
          first_failure = suite + " at " + std::to_string(r) + "," + std::to_string(s);
        ok = ok && result.ok;
      }
    min_trials = std::min(min_trials, total);
  }
  double elapsed = ms_since(t0);
  ok = ok && min_trials >= 200 && elapsed < 60000.0;
  std::ostringstream s;
  s << suites.size() << " property suites, >= " << min_trials
    << " trials each over r,s <= 4, both realms (" << elapsed / 1000.0 << " s)";
  if (!first_failure.empty()) s << "; first failure: " << first_failure;
  detail = s.str();
  return ok;
}

bool criterion5(std::string& detail) {
  bool ok = true;
  int labelings = 0;
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; r + s <= 7; ++s)
      for (Realm realm : {Realm::PL, Realm::Birational})
        for (uint64_t t = 0; t < 50; ++t) {
          Labeling x = random_labeling(
              {r, s}, realm,
              split_seed(50000 + static_cast<uint64_t>(100 * r + 10 * s + (realm == Realm::PL)),
                         t));
          Labeling y = x;
          for (int step = 0; step < r + s; ++step) y = rowmotion(y, Region::full(), false);
          ok = ok && y == x;
          ++labelings;
        }
  detail = "rowmotion period r+s on " + std::to_string(labelings) +
           " labelings across all shapes with r+s <= 7";
  return ok;
}

bool criterion6(std::string& detail) {
  MoonPoly m = crescent16();
  MaxRect r1{3, 4, 1, 5}, r2{1, 5, 2, 2};
  const RectMapKind kinds[] = {RectMapKind::OmegaP, RectMapKind::OmegaQ, RectMapKind::RhoBoth};
  bool ok = true;
  for (uint64_t t = 0; t < 100 && ok; ++t) {
    Filling x = random_integer_filling(m, split_seed(60000, t));
    for (RectMapKind k1 : kinds)
      for (RectMapKind k2 : kinds) {
        Filling a = rect_map_shift(x, r1, k1);
        Filling ab = rect_map_shift(a, rect_with_dims(a.poly, r2.height(), r2.width()), k2);
        Filling b = rect_map_shift(x, r2, k2);
        Filling ba = rect_map_shift(b, rect_with_dims(b.poly, r1.height(), r1.width()), k1);
        ok = ok && ab == ba;
      }
  }
  detail = "9 ordered rectangle-map pairs commute on 100 fillings of the 16-cell shape";
  return ok;
}

bool criterion7(std::string& detail) {
  Filling x = fig3_filling();
  bool ok = ne_chain_max(x, 1) == 3 && se_chain_max(x) == 1;
  detail = "pinned filling statistics neChainMax = 3, seChainMax = 1";
  return ok;
}

bool criterion8(std::string& detail) {
  MoonPoly m = fig3_shape();
  MoonPoly target = partition_poly({3, 3, 1});
  MaxRect wide_m = rect_with_dims(m, 2, 3), wide_t = rect_with_dims(target, 2, 3);
  MaxRect tall_m = rect_with_dims(m, 3, 1), tall_t = rect_with_dims(target, 3, 1);
  bool ok = true;
  long points = 0;
  for (int k = 0; k <= 3 && ok; ++k) {
    std::vector<Filling> sources = enumerate_dilate(m, k);
    std::vector<std::string> images;
    for (const Filling& x : sources) {
      Filling y = omega_path(x, target);
      images.push_back(serialize(y));
      for (int j = 1; j <= 2; ++j) {
        ok = ok && rect_chain_max(x, wide_m, j) == rect_chain_max(y, wide_t, j);
        ok = ok && rect_chain_max(x, tall_m, j) == rect_chain_max(y, tall_t, j);
      }
      ok = ok && se_chain_max(x) == se_chain_max(y);
    }
    std::vector<std::string> targets;
    for (const Filling& y : enumerate_dilate(target, k)) targets.push_back(serialize(y));
    std::sort(images.begin(), images.end());
    std::sort(targets.begin(), targets.end());
    ok = ok && images == targets;
    points += static_cast<long>(sources.size());
  }
  detail = "omegaPath bijects " + std::to_string(points) +
           " dilate points (k <= 3), preserving rectangle and SE statistics";
  return ok;
}

bool criterion9(std::string& detail) {
  bool ok = true;
  // Equivalent pairs at oracle scale.
  const std::vector<std::pair<MoonPoly, MoonPoly>> pairs = {
      {fig3_shape(), partition_poly({3, 3, 1})},
      {rows_poly({{2, 2}, {1, 2}, {1, 2}}), partition_poly({2, 2, 1})}};
  for (const auto& [a, b] : pairs)
    for (int k = 0; k <= 5; ++k) {
      Int ca = count_dilate_oracle(a, k), cb = count_dilate_oracle(b, k);
      ok = ok && ca == cb && count_dilate(a, k) == ca && count_dilate(b, k) == cb;
    }

  CollapseReport collapse = period_collapse_check(fig3_shape());
  SytReport syt = syt_volume_check(fig3_shape());
  ok = ok && collapse.ok && syt.ok && syt.syt == 21;

  // Figure-7 shape: half-integral vertex and held-out polynomial predictions.
  MoonPoly f7 = fig7_shape();
  std::map<RectCoord, Rat> half;
  for (RectCoord p : f7.cells) half[p] = Rat(0);
  for (RectCoord p : {RectCoord{1, 1}, RectCoord{2, 2}, RectCoord{3, 3}, RectCoord{4, 4},
                      RectCoord{4, 1}})
    half[p] = rat(1, 2);
  VertexReport v = vertex_certificate(f7, half);
  ok = ok && v.member && v.vertex && !v.integral;

  EhrhartTable table = ehrhart_table(f7, 13);
  ok = ok && table.coefficients.size() == 14;
  for (int k = 14; k <= 15; ++k)
    ok = ok && eval_poly(table.coefficients, k) == count_dilate(f7, k);
  detail =
      "oracle-equal counts on equivalent shapes, period collapse, SYT volume, "
      "half-integral vertex, two held-out predictions";
  return ok;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    bool (*run)(std::string&);
  };
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6},
                           {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (const Entry& e : entries) {
    std::string detail;
    bool ok = false;
    try {
      ok = e.run(detail);
    } catch (const std::exception& ex) {
      detail += std::string(detail.empty() ? "" : "; ") + "exception: " + ex.what();
    }
    if (!ok) ++failures;
    std::cout << "criterion " << e.id << ": " << (ok ? "PASS" : "FAIL") << "  " << detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
