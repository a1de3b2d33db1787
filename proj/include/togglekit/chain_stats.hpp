#pragma once

#include "togglekit/labeling.hpp"

namespace togglekit {

// The k-family statistic H_{u1,v1}^{u2,v2}(x;k): k vertex-disjoint monotone
// lattice paths, path t running from (u1, v1+t-1) to (u2, v2-k+t) inside the
// rectangle [u1,u2] x [v1,v2]. PL realm: maximum over families of the sum of
// all visited values. Birational realm: sum over families of products.
struct PathFamilySpec {
  int u1{}, v1{}, u2{}, v2{};
  int k{};
};

// k is clamped at min(u2-u1+1, v2-v1+1) (the statistic stabilizes there);
// k = 0 returns the empty-down unit (PL 0, birational 1).
Rat max_weight(const Labeling& x, PathFamilySpec spec);

// Transparent oracle: enumerate every family explicitly. Guarded by the
// rectangle's cell count (default 20; TOGGLEKIT_MAX_CELLS overrides).
Rat brute_force_max_weight(const Labeling& x, PathFamilySpec spec);

// The k-term file sum of rsk(x) ending at a boundary coordinate:
// compose-fold of rsk(x)_{i-t,j-t}, t = 0..k-1. Requires i = r or j = s
// and 1 <= k <= min(i,j).
Rat greene_boundary(const Labeling& x, int i, int j, int k);

// Brute-force guard, overridable via the TOGGLEKIT_MAX_CELLS environment
// variable (applies to path enumeration and dilation oracles).
int max_cells_guard(int fallback);

}  // namespace togglekit
