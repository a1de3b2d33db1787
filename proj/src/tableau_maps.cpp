#include "togglekit/tableau_maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace togglekit {

namespace {

void require_corner(RectShape shape, int a, int b) {
  if (a < 1 || a > shape.r + 1 || b < 1 || b > shape.s + 1)
    throw std::out_of_range("recording corner outside [r+1] x [s+1]");
}

// Cells of file k within the ideal [a] x [b] (clamped to the shape); may be
// empty. No further restriction: Pro^P_{ij} runs the Pro_{ij} file list on
// the whole rectangle.
std::vector<RectCoord> file_in_ideal(RectShape shape, int a, int b, int k) {
  std::vector<RectCoord> cells;
  for (int i = 1; i <= std::min(a, shape.r); ++i) {
    int j = i - k;
    if (j < 1 || j > std::min(b, shape.s)) continue;
    cells.push_back({i, j});
  }
  return cells;
}

Labeling pro_trunc_p(Labeling x, int a, int b, bool inverse) {
  const RectShape shape = x.shape();
  std::vector<int> files;
  for (int k = a - 1; k >= a - b + 1; --k) files.push_back(k);
  if (inverse) std::reverse(files.begin(), files.end());
  // Each file is an antichain, so the file toggle is an involution and the
  // inverse map is simply the reversed file order.
  for (int k : files) {
    std::vector<RectCoord> cells = file_in_ideal(shape, a, b, k);
    if (cells.empty()) continue;
    x = rowmotion(std::move(x), Region::explicit_set(cells), false);
  }
  return x;
}

}  // namespace

Labeling rsk_ab(Labeling x, int a, int b, bool inverse) {
  require_corner(x.shape(), a, b);
  const int m = std::min(a, b);
  if (!inverse) {
    x = transfer_inverse(x);
    for (int t = 1; t <= m - 1; ++t)
      x = rowmotion(std::move(x), Region::principal_ideal({a - t, b - t}), true);
  } else {
    for (int t = m - 1; t >= 1; --t)
      x = rowmotion(std::move(x), Region::principal_ideal({a - t, b - t}), false);
    x = transfer(x);
  }
  return x;
}

Labeling rsk(Labeling x, bool inverse) {
  const RectShape shape = x.shape();
  return rsk_ab(std::move(x), shape.r, shape.s, inverse);
}

namespace {

TableauPart tableau_part(const Labeling& x, Side side) {
  Labeling image = rsk(x);
  const RectShape shape = x.shape();
  TableauPart part;
  part.shape = shape;
  part.side = side;
  for (int i = 1; i <= shape.r; ++i)
    for (int j = 1; j <= shape.s; ++j) {
      int k = i - j;
      bool keep = side == Side::P ? k >= shape.r - shape.s : k <= shape.r - shape.s;
      if (keep) part.entries.push_back({{i, j}, image.at({i, j})});
    }
  return part;
}

}  // namespace

TableauPart p_tableau(const Labeling& x) { return tableau_part(x, Side::P); }
TableauPart q_tableau(const Labeling& x) { return tableau_part(x, Side::Q); }

Labeling pro_trunc(Labeling x, Side side, int a, int b, bool inverse) {
  // Corners live in [r+1] x [s+1]: the cancellation identity composes
  // Pro^Q_{a,t} with a = r+1.
  require_corner(x.shape(), a, b);
  if (side == Side::P) return pro_trunc_p(std::move(x), a, b, inverse);
  // Pro^Q_{a,b} = transpose o Pro^P_{b,a} o transpose.
  return transpose_of(pro_trunc_p(transpose_of(x), b, a, inverse));
}

Labeling pro_full(Labeling x, Side side, bool inverse) {
  const RectShape shape = x.shape();
  return pro_trunc(std::move(x), side, shape.r, shape.s, inverse);
}

Labeling evac_trunc(Labeling x, Side side, int a, int b, bool inverse) {
  if (side == Side::Q) {
    if (!x.shape().contains({a, b})) throw std::out_of_range("evacuation corner outside shape");
    return transpose_of(evac_trunc(transpose_of(x), Side::P, b, a, inverse));
  }
  if (!x.shape().contains({a, b})) throw std::out_of_range("evacuation corner outside shape");
  if (!inverse) {
    for (int j = b; j >= 2; --j) x = pro_trunc(std::move(x), Side::P, a, j, false);
  } else {
    for (int j = 2; j <= b; ++j) x = pro_trunc(std::move(x), Side::P, a, j, true);
  }
  return x;
}

Labeling evac_full(Labeling x, Side side, bool inverse) {
  const RectShape shape = x.shape();
  return evac_trunc(std::move(x), side, shape.r, shape.s, inverse);
}

Labeling swpro(Labeling x, bool inverse) {
  const RectShape shape = x.shape();
  std::vector<int> files;
  for (int k = shape.r - 1; k >= 1 - shape.s; --k) files.push_back(k);
  if (inverse) std::reverse(files.begin(), files.end());
  for (int k : files) x = rowmotion(std::move(x), Region::file(k), false);
  return x;
}

Labeling big_e(Labeling x, bool inverse) {
  const RectShape shape = x.shape();
  if (!inverse) {
    for (int i = shape.r - 1; i >= 1; --i)
      x = rowmotion(std::move(x), Region::principal_ideal({i, shape.s}), true);
  } else {
    for (int i = 1; i <= shape.r - 1; ++i)
      x = rowmotion(std::move(x), Region::principal_ideal({i, shape.s}), false);
  }
  return x;
}

Labeling omega(Labeling x, bool inverse) {
  x = rsk(std::move(x));
  x = pro_full(std::move(x), Side::P, inverse);
  return rsk(std::move(x), true);
}

}  // namespace togglekit
