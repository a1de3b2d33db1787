#include "togglekit/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace togglekit {

std::vector<RectCoord> covers_above(RectShape shape, RectCoord p) {
  std::vector<RectCoord> out;
  if (p.i + 1 <= shape.r) out.push_back({p.i + 1, p.j});
  if (p.j + 1 <= shape.s) out.push_back({p.i, p.j + 1});
  return out;
}

std::vector<RectCoord> covers_below(RectShape shape, RectCoord p) {
  (void)shape;
  std::vector<RectCoord> out;
  if (p.i - 1 >= 1) out.push_back({p.i - 1, p.j});
  if (p.j - 1 >= 1) out.push_back({p.i, p.j - 1});
  return out;
}

static void require_inside(RectShape shape, RectCoord p, const char* what) {
  if (!shape.contains(p))
    throw std::out_of_range(std::string(what) + " coordinate (" + std::to_string(p.i) + "," +
                            std::to_string(p.j) + ") outside shape");
}

std::vector<RectCoord> resolve_region(RectShape shape, const Region& region) {
  std::vector<RectCoord> out;
  auto push_ideal = [&](RectCoord g) {
    require_inside(shape, g, "ideal generator");
    for (int i = 1; i <= g.i; ++i)
      for (int j = 1; j <= g.j; ++j) out.push_back({i, j});
  };
  switch (region.kind) {
    case Region::Kind::UpDiagonal:
      if (region.index < 1 || region.index > shape.r)
        throw std::out_of_range("up-diagonal index outside shape");
      for (int j = 1; j <= shape.s; ++j) out.push_back({region.index, j});
      break;
    case Region::Kind::DownDiagonal:
      if (region.index < 1 || region.index > shape.s)
        throw std::out_of_range("down-diagonal index outside shape");
      for (int i = 1; i <= shape.r; ++i) out.push_back({i, region.index});
      break;
    case Region::Kind::Rank:
      for (int i = 1; i <= shape.r; ++i)
        for (int j = 1; j <= shape.s; ++j)
          if (i + j == region.index) out.push_back({i, j});
      break;
    case Region::Kind::File:
      for (int i = 1; i <= shape.r; ++i)
        for (int j = 1; j <= shape.s; ++j)
          if (i - j == region.index) out.push_back({i, j});
      break;
    case Region::Kind::PrincipalIdeal:
      if (region.elements.size() != 1)
        throw std::invalid_argument("principal ideal needs exactly one generator");
      push_ideal(region.elements[0]);
      break;
    case Region::Kind::IdealOfGenerators:
      for (RectCoord g : region.elements) push_ideal(g);
      break;
    case Region::Kind::ExplicitSet:
      for (RectCoord p : region.elements) {
        require_inside(shape, p, "explicit-set");
        out.push_back(p);
      }
      break;
    case Region::Kind::Full:
      for (int i = 1; i <= shape.r; ++i)
        for (int j = 1; j <= shape.s; ++j) out.push_back({i, j});
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RectCoord> linear_extension(RectShape shape, std::vector<RectCoord> cells) {
  for (RectCoord p : cells) require_inside(shape, p, "linear-extension");
  std::sort(cells.begin(), cells.end(), [](RectCoord a, RectCoord b) {
    if (rank_of(a) != rank_of(b)) return rank_of(a) > rank_of(b);
    return a.j < b.j;
  });
  return cells;
}

std::string region_str(const Region& region) {
  auto coord = [](RectCoord p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  };
  switch (region.kind) {
    case Region::Kind::UpDiagonal: return "updiag=" + std::to_string(region.index);
    case Region::Kind::DownDiagonal: return "downdiag=" + std::to_string(region.index);
    case Region::Kind::Rank: return "rank=" + std::to_string(region.index);
    case Region::Kind::File: return "file=" + std::to_string(region.index);
    case Region::Kind::PrincipalIdeal: return "ideal=" + coord(region.elements[0]);
    case Region::Kind::IdealOfGenerators: {
      std::string out = "ideals=";
      for (size_t t = 0; t < region.elements.size(); ++t)
        out += (t ? ";" : "") + coord(region.elements[t]);
      return out;
    }
    case Region::Kind::ExplicitSet: {
      std::string out = "cells=";
      for (size_t t = 0; t < region.elements.size(); ++t)
        out += (t ? ";" : "") + coord(region.elements[t]);
      return out;
    }
    case Region::Kind::Full: return "full";
  }
  return "?";
}

}  // namespace togglekit
