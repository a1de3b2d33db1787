#pragma once

#include <map>
#include <string>
#include <vector>

#include "togglekit/moon.hpp"

namespace togglekit {

// x >= 0 for every cell plus one sum-<=-1 constraint per maximal clique of
// G_M; cliques are stored as sorted cell lists.
struct QstabDescription {
  MoonPoly poly;
  std::vector<std::vector<RectCoord>> cliques;

  int dimension() const { return poly.size(); }
};

// Maximal cliques via the maximal-chain-per-maximal-rectangle
// characterization. Throws std::domain_error on invalid shapes.
QstabDescription qstab(const MoonPoly& m);

// Independent recomputation straight from the comparable-in-a-common-
// rectangle edge relation (exponential; test-scale only).
std::vector<std::vector<RectCoord>> cliques_brute_force(const MoonPoly& m);

// #(k * QSTAB(M) cap Z^M): nonnegative integer fillings with every clique
// sum <= k (equivalently H_M(x;1) <= k). Fast path straightens to the
// canonical partition and counts order-polytope points by DP; the oracle
// enumerates fillings with pruning and refuses beyond |M| <= guard, k <= 5.
Int count_dilate(const MoonPoly& m, int k);
Int count_dilate_oracle(const MoonPoly& m, int k);
// All k-dilate lattice fillings (oracle guards apply; used by bijection tests).
std::vector<Filling> enumerate_dilate(const MoonPoly& m, int k);

// Exact counts for k = 0..max_k plus the degree-|M| interpolant (filled when
// max_k >= |M|) and the hook-length SYT count of the canonical partition.
struct EhrhartTable {
  std::vector<Int> counts;
  std::vector<Rat> coefficients;  // ascending powers; size |M|+1 when present
  Int syt{0};
};

// Exact Lagrange interpolation through k = 0..d (d = |M|); throws
// std::invalid_argument when fewer than d+1 counts are supplied.
std::vector<Rat> interpolate_counts(const std::vector<Int>& counts, int degree);
Rat eval_poly(const std::vector<Rat>& coefficients, int k);

struct CollapseReport {
  bool ok{true};
  int first_mismatch{-1};
  std::vector<Int> predicted, actual;  // k = |M|+1 .. K
};
// Verifies the degree-|M| interpolant reproduces fresh counts at
// k = |M|+1..K (default K = |M|+3 when K < 0).
CollapseReport period_collapse_check(const MoonPoly& m, int K = -1);

struct SytReport {
  bool ok{true};
  Int syt{0};            // hook-length count for the canonical partition
  Rat leading{0};        // interpolant's top coefficient
  Rat scaled_leading{0};  // leading * |M|!
};
SytReport syt_volume_check(const MoonPoly& m);
Int syt_count(const std::vector<int>& lambda);

struct VertexReport {
  bool member{false};
  bool vertex{false};
  bool integral{false};
  int tight_rank{0};
};
// Membership, vertexhood (tight constraint normals span |M| dimensions,
// by exact rational elimination) and integrality of a point of QSTAB(M).
// Throws std::invalid_argument when the point's support is not cells(M).
VertexReport vertex_certificate(const MoonPoly& m, const std::map<RectCoord, Rat>& point);

// Full table for CLI/tests: counts 0..max_k, interpolant when reachable.
EhrhartTable ehrhart_table(const MoonPoly& m, int max_k, bool use_oracle = false);

}  // namespace togglekit
