#pragma once

#include <string>
#include <vector>

namespace togglekit {

// 1-based coordinate in the rectangle poset [r] x [s].
// i indexes up-diagonals (southwest -> northeast), j down-diagonals
// (northwest -> southeast); (i,j) <= (i',j') componentwise.
struct RectCoord {
  int i{};
  int j{};

  friend bool operator==(RectCoord a, RectCoord b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(RectCoord a, RectCoord b) { return !(a == b); }
  // Lexicographic order, used only for deterministic containers/output.
  friend bool operator<(RectCoord a, RectCoord b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

// Product (poset) order; distinct from the lexicographic operator< above.
inline bool coord_leq(RectCoord a, RectCoord b) { return a.i <= b.i && a.j <= b.j; }

// File k = i - j (constant along northwest<->southeast "columns" of the
// tilted picture); rank = i + j.
inline int file_of(RectCoord p) { return p.i - p.j; }
inline int rank_of(RectCoord p) { return p.i + p.j; }

struct RectShape {
  int r{};  // number of up-diagonals
  int s{};  // number of down-diagonals

  std::vector<RectCoord> cells() const {
    std::vector<RectCoord> out;
    out.reserve(static_cast<size_t>(r) * static_cast<size_t>(s));
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= s; ++j) out.push_back({i, j});
    return out;
  }
  bool contains(RectCoord p) const { return 1 <= p.i && p.i <= r && 1 <= p.j && p.j <= s; }
  RectShape transposed() const { return RectShape{s, r}; }

  friend bool operator==(RectShape a, RectShape b) { return a.r == b.r && a.s == b.s; }
  friend bool operator!=(RectShape a, RectShape b) { return !(a == b); }
};

// Closed set of region selectors; every toggleable subset used by the maps
// is one of these, so map programs stay serializable.
struct Region {
  enum class Kind {
    UpDiagonal,        // fixed i
    DownDiagonal,      // fixed j
    Rank,              // fixed i + j
    File,              // fixed i - j
    PrincipalIdeal,    // { q : q <= p } for a generator p
    IdealOfGenerators, // union of principal ideals
    ExplicitSet,
    Full,              // whole rectangle (ideal of the top element)
  };

  Kind kind{Kind::Full};
  int index{};                       // UpDiagonal / DownDiagonal / Rank / File
  std::vector<RectCoord> elements;   // PrincipalIdeal (size 1), generators, explicit set

  static Region up_diagonal(int i) { return Region{Kind::UpDiagonal, i, {}}; }
  static Region down_diagonal(int j) { return Region{Kind::DownDiagonal, j, {}}; }
  static Region rank(int k) { return Region{Kind::Rank, k, {}}; }
  static Region file(int k) { return Region{Kind::File, k, {}}; }
  static Region principal_ideal(RectCoord p) { return Region{Kind::PrincipalIdeal, 0, {p}}; }
  static Region ideal_of(std::vector<RectCoord> gens) {
    return Region{Kind::IdealOfGenerators, 0, std::move(gens)};
  }
  static Region explicit_set(std::vector<RectCoord> cells) {
    return Region{Kind::ExplicitSet, 0, std::move(cells)};
  }
  static Region full() { return Region{Kind::Full, 0, {}}; }

  friend bool operator==(const Region& a, const Region& b) {
    return a.kind == b.kind && a.index == b.index && a.elements == b.elements;
  }
};

// Covers of p inside [r] x [s]: q covers p iff q = p + (1,0) or p + (0,1).
std::vector<RectCoord> covers_above(RectShape shape, RectCoord p);
std::vector<RectCoord> covers_below(RectShape shape, RectCoord p);

// Members of a region, sorted lexicographically (deterministic). Generators
// and explicit cells must lie inside the shape.
std::vector<RectCoord> resolve_region(RectShape shape, const Region& region);

// Canonical top-to-bottom toggle order: descending rank i+j, ties by
// ascending j. Rowmotion applies toggles in exactly this order.
std::vector<RectCoord> linear_extension(RectShape shape, std::vector<RectCoord> cells);

std::string region_str(const Region& region);

}  // namespace togglekit
