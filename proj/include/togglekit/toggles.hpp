#pragma once

#include "togglekit/labeling.hpp"
#include "togglekit/poset.hpp"

namespace togglekit {

// Single toggle at p, realm-generic:
//   PL:  x_p -> min_{q >. p} x_q + max_{q <. p} x_q - x_p   (empty min = 1, empty max = 0)
//   Bir: x_p -> (sum_{q >. p} 1/x_q)^-1 * (sum_{q <. p} x_q) / x_p  (empty sums = 1)
// Covers are taken in the ambient rectangle.
Labeling toggle(Labeling x, RectCoord p);

// Rowmotion on a region: toggles in the canonical top-to-bottom order
// (descending rank, ties by ascending j); inverse reverses the order.
Labeling rowmotion(Labeling x, const Region& region, bool inverse = false);

// Transfer map, coordinatewise from the input copy:
//   PL:  phi(x)_p = x_p - max_{q <. p} x_q          (empty max = 0)
//   Bir: phi(x)_p = x_p / sum_{q <. p} x_q          (empty sum = 1)
Labeling transfer(const Labeling& x);

// Exact inverse by the bottom-up recurrence
//   phi^-1(x)_p = compose(x_p, downCombine_{q <. p} phi^-1(x)_q),
// with the empty-down unit at minimal elements.
Labeling transfer_inverse(const Labeling& x);

}  // namespace togglekit
