#pragma once

#include <string>

#include "togglekit/labeling.hpp"
#include "togglekit/moon.hpp"

namespace togglekit {

// Fixed-width grid with i increasing downward, j rightward; entries as
// canonical "p/q" strings.
std::string render_labeling_ascii(const Labeling& x);
std::string render_moon_ascii(const MoonPoly& m);
std::string render_filling_ascii(const Filling& x);

// Standalone tikzpicture bodies (unit squares, node per cell).
std::string render_labeling_tikz(const Labeling& x);
std::string render_moon_tikz(const MoonPoly& m);
std::string render_filling_tikz(const Filling& x);

}  // namespace togglekit
