#include "togglekit/moon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "togglekit/chain_stats.hpp"
#include "togglekit/tableau_maps.hpp"

namespace togglekit {

namespace {

struct Interval {
  int lo{0}, hi{-1};  // empty when hi < lo
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

// Per-index supports; moon validity makes each an interval.
std::map<int, std::vector<int>> supports(const MoonPoly& m, bool by_row) {
  std::map<int, std::vector<int>> out;
  for (RectCoord p : m.cells) out[by_row ? p.i : p.j].push_back(by_row ? p.j : p.i);
  return out;
}

std::vector<int> sorted_lengths(const std::map<int, std::vector<int>>& sup) {
  std::vector<int> lens;
  lens.reserve(sup.size());
  for (const auto& [idx, elems] : sup) lens.push_back(static_cast<int>(elems.size()));
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return lens;
}

bool is_interval(const std::vector<int>& sorted_elems) {
  for (size_t t = 1; t < sorted_elems.size(); ++t)
    if (sorted_elems[t] != sorted_elems[t - 1] + 1) return false;
  return true;
}

bool in_rows(const MaxRect& r, int i) { return r.i1 <= i && i <= r.i2; }
bool in_cols(const MaxRect& r, int j) { return r.j1 <= j && j <= r.j2; }

RectCoord axis_image(RectCoord p, const MaxRect& r, ShiftAxis axis) {
  if (axis == ShiftAxis::DownDiagonals)
    return (in_cols(r, p.j) && !in_rows(r, p.i)) ? RectCoord{p.i, p.j - 1} : p;
  return (in_rows(r, p.i) && !in_cols(r, p.j)) ? RectCoord{p.i - 1, p.j} : p;
}

RectCoord rho_image(RectCoord p, const MaxRect& r) {
  bool ir = in_rows(r, p.i), ic = in_cols(r, p.j);
  if (ir && ic) return p;
  if (!ir && ic) return {p.i, p.j - 1};
  if (ir && !ic) return {p.i - 1, p.j};
  return {p.i - 1, p.j - 1};
}

// Legality shared by the axis shifts and the rowmotion shift: the cell map
// must be injective onto a valid moon polyomino with both length multisets
// preserved. Returns the image when legal.
bool legal_image(const MoonPoly& m, const std::vector<RectCoord>& mapped, MoonPoly* image_out) {
  MoonPoly image = MoonPoly::of(mapped);
  if (image.size() != m.size()) return false;
  if (!validate_moon(image).ok) return false;
  if (sorted_lengths(supports(m, true)) != sorted_lengths(supports(image, true))) return false;
  if (sorted_lengths(supports(m, false)) != sorted_lengths(supports(image, false))) return false;
  if (image_out) *image_out = std::move(image);
  return true;
}

bool is_maximal_in(const MoonPoly& m, const MaxRect& rect) {
  const std::vector<MaxRect> rects = maximal_rectangles(m);
  return std::find(rects.begin(), rects.end(), rect) != rects.end();
}

Labeling extract_local(const Filling& x, const MaxRect& rect) {
  Labeling loc(RectShape{rect.height(), rect.width()}, Realm::PL);
  for (int i = rect.i1; i <= rect.i2; ++i)
    for (int j = rect.j1; j <= rect.j2; ++j)
      loc.at({i - rect.i1 + 1, j - rect.j1 + 1}) = x.at({i, j});
  return loc;
}

Labeling apply_rect_map(const Labeling& loc, RectMapKind kind, bool inverse) {
  switch (kind) {
    case RectMapKind::OmegaP: return omega(loc, inverse);
    case RectMapKind::OmegaQ: {
      Labeling mid = rsk(loc);
      mid = pro_full(std::move(mid), Side::Q, inverse);
      return rsk(std::move(mid), true);
    }
    case RectMapKind::RhoBoth: {
      Labeling mid = transfer_inverse(loc);
      mid = rowmotion(std::move(mid), Region::full(), !inverse);
      return transfer(mid);
    }
  }
  throw std::logic_error("unhandled rectangle map kind");
}

RectCoord cell_image(RectCoord p, const MaxRect& rect, RectMapKind kind) {
  if (kind == RectMapKind::RhoBoth) return rho_image(p, rect);
  return axis_image(p, rect, kind == RectMapKind::OmegaP ? ShiftAxis::DownDiagonals
                                                         : ShiftAxis::UpDiagonals);
}

}  // namespace

MoonPoly MoonPoly::of(std::vector<RectCoord> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return MoonPoly{std::move(cells)};
}

bool MoonPoly::contains(RectCoord p) const {
  return std::binary_search(cells.begin(), cells.end(), p);
}

std::vector<RectCoord> MaxRect::cell_list() const {
  std::vector<RectCoord> out;
  for (int i = i1; i <= i2; ++i)
    for (int j = j1; j <= j2; ++j) out.push_back({i, j});
  return out;
}

MoonReport validate_moon(const MoonPoly& m) {
  auto rows = supports(m, true);
  auto cols = supports(m, false);
  for (auto& [idx, elems] : rows) std::sort(elems.begin(), elems.end());
  for (auto& [idx, elems] : cols) std::sort(elems.begin(), elems.end());

  for (const auto& [i, elems] : rows)
    if (!is_interval(elems))
      return {false, "up-diagonal " + std::to_string(i) + " is not an interval"};
  for (const auto& [j, elems] : cols)
    if (!is_interval(elems))
      return {false, "down-diagonal " + std::to_string(j) + " is not an interval"};

  for (auto a = rows.begin(); a != rows.end(); ++a)
    for (auto b = std::next(a); b != rows.end(); ++b) {
      Interval ia{a->second.front(), a->second.back()};
      Interval ib{b->second.front(), b->second.back()};
      if (!ia.contains(ib) && !ib.contains(ia))
        return {false, "up-diagonals " + std::to_string(a->first) + " and " +
                           std::to_string(b->first) + " are not nested"};
    }
  return {};
}

std::vector<MaxRect> maximal_rectangles(const MoonPoly& m) {
  MoonReport report = validate_moon(m);
  if (!report.ok) throw std::domain_error("not a moon polyomino: " + report.reason);

  auto rows = supports(m, true);
  std::vector<std::pair<int, Interval>> row_ivals;
  for (auto& [i, elems] : rows) {
    auto [lo, hi] = std::minmax_element(elems.begin(), elems.end());
    row_ivals.push_back({i, Interval{*lo, *hi}});
  }

  std::vector<MaxRect> out;
  for (size_t a = 0; a < row_ivals.size(); ++a) {
    Interval width = row_ivals[a].second;
    for (size_t b = a; b < row_ivals.size(); ++b) {
      if (row_ivals[b].first != row_ivals[a].first + static_cast<int>(b - a)) break;
      const Interval& rb = row_ivals[b].second;
      width.lo = std::max(width.lo, rb.lo);
      width.hi = std::min(width.hi, rb.hi);
      bool up_blocked = a == 0 || row_ivals[a - 1].first != row_ivals[a].first - 1 ||
                        !row_ivals[a - 1].second.contains(width);
      bool down_blocked = b + 1 == row_ivals.size() ||
                          row_ivals[b + 1].first != row_ivals[b].first + 1 ||
                          !row_ivals[b + 1].second.contains(width);
      if (up_blocked && down_blocked)
        out.push_back({row_ivals[a].first, row_ivals[b].first, width.lo, width.hi});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool shift_legal(const MoonPoly& m, const ShiftStep& step) {
  if (!is_maximal_in(m, step.rect)) return false;
  std::vector<RectCoord> mapped;
  mapped.reserve(m.cells.size());
  for (RectCoord p : m.cells) mapped.push_back(axis_image(p, step.rect, step.axis));
  return legal_image(m, mapped, nullptr);
}

MoonPoly apply_shift(const MoonPoly& m, const ShiftStep& step) {
  if (!is_maximal_in(m, step.rect))
    throw std::invalid_argument("not a legal shift: rectangle is not maximal");
  std::vector<RectCoord> mapped;
  mapped.reserve(m.cells.size());
  for (RectCoord p : m.cells) mapped.push_back(axis_image(p, step.rect, step.axis));
  MoonPoly image;
  if (!legal_image(m, mapped, &image)) throw std::invalid_argument("not a legal shift");
  return image;
}

MoonPoly partition_poly(const std::vector<int>& lambda) {
  std::vector<RectCoord> cells;
  for (size_t t = 0; t < lambda.size(); ++t) {
    if (lambda[t] < 1 || (t > 0 && lambda[t] > lambda[t - 1]))
      throw std::invalid_argument("lambda must be weakly decreasing and positive");
    for (int j = 1; j <= lambda[t]; ++j) cells.push_back({static_cast<int>(t) + 1, j});
  }
  return MoonPoly::of(std::move(cells));
}

MoonPoly translated(const MoonPoly& m, int di, int dj) {
  std::vector<RectCoord> cells;
  cells.reserve(m.cells.size());
  for (RectCoord p : m.cells) cells.push_back({p.i + di, p.j + dj});
  return MoonPoly::of(std::move(cells));
}

MoonPoly normalized(const MoonPoly& m) {
  if (m.cells.empty()) return m;
  int min_i = m.cells.front().i, min_j = m.cells.front().j;
  for (RectCoord p : m.cells) {
    min_i = std::min(min_i, p.i);
    min_j = std::min(min_j, p.j);
  }
  return translated(m, 1 - min_i, 1 - min_j);
}

Straightening straighten(const MoonPoly& m) {
  if (!validate_moon(m).ok) throw std::domain_error("not a moon polyomino");

  Straightening out;
  out.lambda = sorted_lengths(supports(m, true));
  const MoonPoly target = partition_poly(out.lambda);

  MoonPoly cur = m;
  std::set<std::vector<RectCoord>> visited;
  while (normalized(cur) != target) {
    if (!visited.insert(normalized(cur).cells).second)
      throw std::logic_error("straightening revisited a shape");

    // Best legal non-identity shift: most cells moved, then down-diagonal
    // axis first, then lexicographically smallest rectangle.
    bool found = false;
    ShiftStep best;
    int best_moved = -1;
    for (const MaxRect& rect : maximal_rectangles(cur)) {
      for (ShiftAxis axis : {ShiftAxis::DownDiagonals, ShiftAxis::UpDiagonals}) {
        int moved = 0;
        for (RectCoord p : cur.cells)
          if (axis_image(p, rect, axis) != p) ++moved;
        if (moved == 0) continue;
        ShiftStep step{rect, axis};
        if (!shift_legal(cur, step)) continue;
        if (moved > best_moved) {
          best = step;
          best_moved = moved;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("straightening stuck before reaching a partition");
    cur = apply_shift(cur, best);
    out.steps.push_back(best);
  }
  out.result = cur;
  return out;
}

bool equivalent(const MoonPoly& a, const MoonPoly& b) {
  return straighten(a).lambda == straighten(b).lambda;
}

Filling Filling::of(MoonPoly poly, std::map<RectCoord, Rat> values) {
  if (static_cast<int>(values.size()) != poly.size())
    throw std::invalid_argument("filling must assign exactly the cells of the polyomino");
  for (const auto& [p, v] : values)
    if (!poly.contains(p)) throw std::invalid_argument("filling value outside the polyomino");
  Filling out;
  out.poly = std::move(poly);
  out.values = std::move(values);
  return out;
}

const Rat& Filling::at(RectCoord p) const {
  auto it = values.find(p);
  if (it == values.end()) throw std::out_of_range("cell outside the polyomino");
  return it->second;
}

bool Filling::integral() const {
  for (const auto& [p, v] : values)
    if (v.get_den() != 1) return false;
  return true;
}

Filling translated(const Filling& x, int di, int dj) {
  std::map<RectCoord, Rat> values;
  for (const auto& [p, v] : x.values) values[{p.i + di, p.j + dj}] = v;
  return Filling::of(translated(x.poly, di, dj), std::move(values));
}

Filling rect_map_shift(const Filling& x, const MaxRect& rect, RectMapKind kind) {
  if (!is_maximal_in(x.poly, rect))
    throw std::invalid_argument("not a legal shift: rectangle is not maximal");
  std::vector<RectCoord> mapped;
  mapped.reserve(x.poly.cells.size());
  for (RectCoord p : x.poly.cells) mapped.push_back(cell_image(p, rect, kind));
  MoonPoly image;
  if (!legal_image(x.poly, mapped, &image)) throw std::invalid_argument("not a legal shift");

  Labeling out_loc = apply_rect_map(extract_local(x, rect), kind, false);

  std::map<RectCoord, Rat> values;
  for (RectCoord p : x.poly.cells) {
    if (rect.contains(p))
      values[p] = out_loc.at({p.i - rect.i1 + 1, p.j - rect.j1 + 1});
    else
      values[cell_image(p, rect, kind)] = x.at(p);
  }
  return Filling::of(std::move(image), std::move(values));
}

Filling rect_map_shift_inverse(const Filling& y, const MoonPoly& source, const MaxRect& rect,
                               RectMapKind kind) {
  if (!is_maximal_in(source, rect))
    throw std::invalid_argument("not a legal shift: rectangle is not maximal");
  std::vector<RectCoord> mapped;
  mapped.reserve(source.cells.size());
  for (RectCoord p : source.cells) mapped.push_back(cell_image(p, rect, kind));
  MoonPoly image;
  if (!legal_image(source, mapped, &image)) throw std::invalid_argument("not a legal shift");
  if (image != y.poly)
    throw std::invalid_argument("labeling does not live on the image of the source shape");

  // The rectangle is pointwise fixed, so its sub-labeling reads off y directly.
  Labeling loc(RectShape{rect.height(), rect.width()}, Realm::PL);
  for (int i = rect.i1; i <= rect.i2; ++i)
    for (int j = rect.j1; j <= rect.j2; ++j) loc.at({i - rect.i1 + 1, j - rect.j1 + 1}) = y.at({i, j});
  Labeling out_loc = apply_rect_map(loc, kind, true);

  std::map<RectCoord, Rat> values;
  for (RectCoord p : source.cells) {
    if (rect.contains(p))
      values[p] = out_loc.at({p.i - rect.i1 + 1, p.j - rect.j1 + 1});
    else
      values[p] = y.at(cell_image(p, rect, kind));
  }
  return Filling::of(source, std::move(values));
}

Filling omega_shift(const Filling& x, const ShiftStep& step) {
  return rect_map_shift(x, step.rect,
                        step.axis == ShiftAxis::DownDiagonals ? RectMapKind::OmegaP
                                                              : RectMapKind::OmegaQ);
}

Filling omega_shift_inverse(const Filling& y, const MoonPoly& source, const ShiftStep& step) {
  return rect_map_shift_inverse(y, source, step.rect,
                                step.axis == ShiftAxis::DownDiagonals ? RectMapKind::OmegaP
                                                                      : RectMapKind::OmegaQ);
}

Filling rho_shift(const Filling& x, const MaxRect& rect) {
  return rect_map_shift(x, rect, RectMapKind::RhoBoth);
}

Filling rho_shift_inverse(const Filling& y, const MoonPoly& source, const MaxRect& rect) {
  return rect_map_shift_inverse(y, source, rect, RectMapKind::RhoBoth);
}

Filling omega_path(const Filling& x, const MoonPoly& n) {
  Straightening sm = straighten(x.poly);
  Straightening sn = straighten(n);
  if (sm.lambda != sn.lambda)
    throw std::invalid_argument("polyominoes are not equivalent");

  Filling cur = x;
  for (const ShiftStep& step : sm.steps) cur = omega_shift(cur, step);

  if (!sm.result.cells.empty()) {
    RectCoord from = sm.result.cells.front(), to = sn.result.cells.front();
    cur = translated(cur, to.i - from.i, to.j - from.j);
  }

  std::vector<MoonPoly> stages{n};
  for (const ShiftStep& step : sn.steps) stages.push_back(apply_shift(stages.back(), step));
  for (size_t t = sn.steps.size(); t-- > 0;)
    cur = omega_shift_inverse(cur, stages[t], sn.steps[t]);
  return cur;
}

Rat rect_chain_max(const Filling& x, const MaxRect& rect, int k) {
  for (RectCoord p : rect.cell_list())
    if (!x.poly.contains(p)) throw std::domain_error("rectangle not inside the polyomino");
  Labeling loc = extract_local(x, rect);
  return max_weight(loc, PathFamilySpec{1, 1, rect.height(), rect.width(), k});
}

Rat ne_chain_max(const Filling& x, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  for (const auto& [p, v] : x.values)
    if (v < 0) throw std::domain_error("filling must be nonnegative");
  Rat best(0);
  if (k == 0) return best;
  for (const MaxRect& rect : maximal_rectangles(x.poly))
    best = std::max(best, rect_chain_max(x, rect, k));
  return best;
}

namespace {

int longest_se_chain(const std::vector<RectCoord>& cells) {
  // Strictly increasing i, strictly decreasing j; cells arrive sorted lex.
  std::vector<int> len(cells.size(), 1);
  int best = cells.empty() ? 0 : 1;
  for (size_t a = 0; a < cells.size(); ++a) {
    for (size_t b = 0; b < a; ++b)
      if (cells[b].i < cells[a].i && cells[b].j > cells[a].j)
        len[a] = std::max(len[a], len[b] + 1);
    best = std::max(best, len[a]);
  }
  return best;
}

}  // namespace

int se_chain_max(const Filling& x) {
  for (const auto& [p, v] : x.values)
    if (v < 0) throw std::domain_error("filling must be nonnegative");

  int direct = 0;
  int stabilized = 0;
  for (const MaxRect& rect : maximal_rectangles(x.poly)) {
    std::vector<RectCoord> support;
    for (RectCoord p : rect.cell_list())
      if (x.at(p) != 0) support.push_back(p);
    direct = std::max(direct, longest_se_chain(support));

    int cap = std::min(rect.height(), rect.width());
    for (int k = 0; k <= cap; ++k) {
      if (rect_chain_max(x, rect, k) == rect_chain_max(x, rect, k + 1)) {
        stabilized = std::max(stabilized, k);
        break;
      }
    }
  }
  if (direct != stabilized)
    throw std::logic_error("southeast-chain statistic cross-check failed");
  return direct;
}

}  // namespace togglekit
