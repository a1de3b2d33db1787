#pragma once

#include <map>
#include <string>
#include <vector>

#include "togglekit/labeling.hpp"

namespace togglekit {

// Finite cell set in Z x Z, i indexing up-diagonals and j down-diagonals.
// Stored sorted lexicographically and deduplicated.
struct MoonPoly {
  std::vector<RectCoord> cells;

  static MoonPoly of(std::vector<RectCoord> cells);
  bool contains(RectCoord p) const;
  int size() const { return static_cast<int>(cells.size()); }

  friend bool operator==(const MoonPoly& a, const MoonPoly& b) { return a.cells == b.cells; }
  friend bool operator!=(const MoonPoly& a, const MoonPoly& b) { return !(a == b); }
};

// Report-style validation: convexity (each diagonal's support is an integer
// interval) and intersection-freeness (up-diagonal supports pairwise nested).
// `reason` names the first violated diagonal or pair.
struct MoonReport {
  bool ok{true};
  std::string reason;
};
MoonReport validate_moon(const MoonPoly& m);

// Inclusion-maximal axis-aligned rectangle [i1,i2] x [j1,j2] inside a moon
// polyomino.
struct MaxRect {
  int i1{}, i2{}, j1{}, j2{};

  int height() const { return i2 - i1 + 1; }
  int width() const { return j2 - j1 + 1; }
  bool contains(RectCoord p) const {
    return i1 <= p.i && p.i <= i2 && j1 <= p.j && p.j <= j2;
  }
  std::vector<RectCoord> cell_list() const;

  friend bool operator==(const MaxRect& a, const MaxRect& b) {
    return a.i1 == b.i1 && a.i2 == b.i2 && a.j1 == b.j1 && a.j2 == b.j2;
  }
  friend bool operator!=(const MaxRect& a, const MaxRect& b) { return !(a == b); }
  friend bool operator<(const MaxRect& a, const MaxRect& b) {
    if (a.i1 != b.i1) return a.i1 < b.i1;
    if (a.i2 != b.i2) return a.i2 < b.i2;
    if (a.j1 != b.j1) return a.j1 < b.j1;
    return a.j2 < b.j2;
  }
};

// All inclusion-maximal rectangles, lexicographic by (i1,i2,j1,j2).
// Throws std::domain_error if m fails validation.
std::vector<MaxRect> maximal_rectangles(const MoonPoly& m);

// Unit diagonal shift w.r.t. a maximal rectangle: down-diagonal axis moves
// every cell with j in cols(rect) outside rect to (i,j-1); up-diagonal axis
// is the transposed formula (i-1,j).
enum class ShiftAxis { DownDiagonals, UpDiagonals };

struct ShiftStep {
  MaxRect rect;
  ShiftAxis axis{ShiftAxis::DownDiagonals};

  friend bool operator==(const ShiftStep& a, const ShiftStep& b) {
    return a.rect == b.rect && a.axis == b.axis;
  }
};

// Legal iff rect is maximal in m and the image is an injective, valid moon
// polyomino with the same row- and column-length multisets (equivalence).
bool shift_legal(const MoonPoly& m, const ShiftStep& step);
MoonPoly apply_shift(const MoonPoly& m, const ShiftStep& step);

// Greedy straightening to the canonical top-left-justified partition of the
// up-diagonal length multiset. `steps` applied in order to the input yield
// `result` (a translate of partition_poly(lambda)).
struct Straightening {
  std::vector<int> lambda;
  std::vector<ShiftStep> steps;
  MoonPoly result;
};
Straightening straighten(const MoonPoly& m);

// Partition shape anchored at (1,1); lambda weakly decreasing and positive.
MoonPoly partition_poly(const std::vector<int>& lambda);

// Translation-normalized copy (anchor moved to (1,1)).
MoonPoly normalized(const MoonPoly& m);
MoonPoly translated(const MoonPoly& m, int di, int dj);

// Identical canonical partitions (decided by straightening both sides).
bool equivalent(const MoonPoly& a, const MoonPoly& b);

// A PL-realm value on every cell of a moon polyomino.
struct Filling {
  MoonPoly poly;
  std::map<RectCoord, Rat> values;

  // Validates that values covers exactly the cells.
  static Filling of(MoonPoly poly, std::map<RectCoord, Rat> values);

  const Rat& at(RectCoord p) const;
  bool integral() const;

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.poly == b.poly && a.values == b.values;
  }
  friend bool operator!=(const Filling& a, const Filling& b) { return !(a == b); }
};

Filling translated(const Filling& x, int di, int dj);

// The realm map applied inside the rectangle while outside labels ride the
// cell map: OmegaP = RSK^-1 o Pro^P o RSK with the down-diagonal shift,
// OmegaQ = RSK^-1 o Pro^Q o RSK with the up-diagonal shift, RhoBoth =
// phi o rho^-1 o phi^-1 with both strips (and the diagonal remainder)
// shifting.
enum class RectMapKind { OmegaP, OmegaQ, RhoBoth };

Filling rect_map_shift(const Filling& x, const MaxRect& rect, RectMapKind kind);
// Undoes rect_map_shift: y must live on the image of `source` under the
// same (rect, kind) shift.
Filling rect_map_shift_inverse(const Filling& y, const MoonPoly& source, const MaxRect& rect,
                               RectMapKind kind);

// Omega_{M -> N} for a single legal step (axis picks OmegaP / OmegaQ).
Filling omega_shift(const Filling& x, const ShiftStep& step);
Filling omega_shift_inverse(const Filling& y, const MoonPoly& source, const ShiftStep& step);

// The section-5.4 extension of phi o rho^-1 o phi^-1.
Filling rho_shift(const Filling& x, const MaxRect& rect);
Filling rho_shift_inverse(const Filling& y, const MoonPoly& source, const MaxRect& rect);

// Omega_{M -> N} along straighten(M) then the reverse of straighten(N).
// Throws std::invalid_argument when the shapes are not equivalent.
Filling omega_path(const Filling& x, const MoonPoly& n);

// H_M(x;k): maximum weight of k disjoint northeast chains in a common
// rectangle (equivalently, maximum over maximal rectangles). Values are
// expected nonnegative for the statistic to be meaningful.
Rat ne_chain_max(const Filling& x, int k);
Rat rect_chain_max(const Filling& x, const MaxRect& rect, int k);

// L_M(x): maximum size of a strict southeast chain (antichain of cells with
// nonzero labels inside a common rectangle). Computed directly and by the
// per-rectangle Greene stabilization; throws std::logic_error if the two
// ever disagree.
int se_chain_max(const Filling& x);

}  // namespace togglekit
