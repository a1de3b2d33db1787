#include "togglekit/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace togglekit {

namespace {

// Pads every entry of a row-major table to the column's widest entry.
std::string grid_to_string(const std::vector<std::vector<std::string>>& rows) {
  size_t width = 0;
  for (const auto& row : rows)
    for (const auto& entry : row) width = std::max(width, entry.size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << std::string(width - row[j].size(), ' ') << row[j];
    }
    out << '\n';
  }
  return out.str();
}

struct GridExtent {
  int imin, imax, jmin, jmax;
};

GridExtent extent_of(const std::vector<RectCoord>& cells) {
  GridExtent e{cells.front().i, cells.front().i, cells.front().j, cells.front().j};
  for (RectCoord p : cells) {
    e.imin = std::min(e.imin, p.i);
    e.imax = std::max(e.imax, p.i);
    e.jmin = std::min(e.jmin, p.j);
    e.jmax = std::max(e.jmax, p.j);
  }
  return e;
}

// tikz y grows upward; matrix row i sits at y = -i so row 1 is on top.
std::string tikz_of(const std::vector<std::pair<RectCoord, std::string>>& cells) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (const auto& [p, label] : cells) {
    out << "  \\draw (" << p.j - 1 << "," << -p.i << ") rectangle (" << p.j << "," << -(p.i - 1)
        << ");\n";
    if (!label.empty())
      out << "  \\node at (" << p.j - 0.5 << "," << -p.i + 0.5 << ") {$" << label << "$};\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string render_labeling_ascii(const Labeling& x) {
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= x.shape().r; ++i) {
    std::vector<std::string> row;
    for (int j = 1; j <= x.shape().s; ++j) row.push_back(rat_str(x.at({i, j})));
    rows.push_back(std::move(row));
  }
  return grid_to_string(rows);
}

std::string render_moon_ascii(const MoonPoly& m) {
  GridExtent e = extent_of(m.cells);
  std::vector<std::vector<std::string>> rows;
  for (int i = e.imin; i <= e.imax; ++i) {
    std::vector<std::string> row;
    for (int j = e.jmin; j <= e.jmax; ++j) row.push_back(m.contains({i, j}) ? "#" : ".");
    rows.push_back(std::move(row));
  }
  return grid_to_string(rows);
}

std::string render_filling_ascii(const Filling& x) {
  GridExtent e = extent_of(x.poly.cells);
  std::vector<std::vector<std::string>> rows;
  for (int i = e.imin; i <= e.imax; ++i) {
    std::vector<std::string> row;
    for (int j = e.jmin; j <= e.jmax; ++j)
      row.push_back(x.poly.contains({i, j}) ? rat_str(x.at({i, j})) : ".");
    rows.push_back(std::move(row));
  }
  return grid_to_string(rows);
}

std::string render_labeling_tikz(const Labeling& x) {
  std::vector<std::pair<RectCoord, std::string>> cells;
  for (int i = 1; i <= x.shape().r; ++i)
    for (int j = 1; j <= x.shape().s; ++j) cells.push_back({{i, j}, rat_str(x.at({i, j}))});
  return tikz_of(cells);
}

std::string render_moon_tikz(const MoonPoly& m) {
  std::vector<std::pair<RectCoord, std::string>> cells;
  for (RectCoord p : m.cells) cells.push_back({p, ""});
  return tikz_of(cells);
}

std::string render_filling_tikz(const Filling& x) {
  std::vector<std::pair<RectCoord, std::string>> cells;
  for (RectCoord p : x.poly.cells) cells.push_back({p, rat_str(x.at(p))});
  return tikz_of(cells);
}

}  // namespace togglekit
