#pragma once

#include <cstdint>

#include "togglekit/labeling.hpp"

namespace togglekit {

// splitmix64: the fixed splittable scheme used to expand a root seed into
// per-trial seeds (trial t uses split(root, t)). Keeping this in the library
// makes verifier runs replayable from the values reported in output.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] (inclusive); hi - lo must be modest.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

inline uint64_t split_seed(uint64_t root, uint64_t index) {
  SplitMix64 g(root ^ (0xA0761D6478BD642FULL * (index + 1)));
  return g.next();
}

// Random exact-rational labeling: PL draws numerators in [-24, 24] over
// denominators in [1, 8]; birational draws positive numerators in [1, 24].
inline Labeling random_labeling(RectShape shape, Realm realm, uint64_t seed) {
  SplitMix64 g(seed);
  Labeling x(shape, realm);
  for (int i = 1; i <= shape.r; ++i)
    for (int j = 1; j <= shape.s; ++j) {
      long num = realm == Realm::PL ? g.range(-24, 24) : g.range(1, 24);
      long den = g.range(1, 8);
      x.at({i, j}) = rat(num, den);
    }
  return x;
}

// Random 0/1 order-filter indicator (combinatorial realm element).
inline Labeling random_filter_indicator(RectShape shape, uint64_t seed) {
  SplitMix64 g(seed);
  Labeling x(shape, Realm::PL);
  // Build upward-closed support: sweep in decreasing rank, forcing closure.
  for (int i = shape.r; i >= 1; --i)
    for (int j = shape.s; j >= 1; --j) {
      bool forced = false;
      for (RectCoord q : covers_above(shape, {i, j}))
        if (x.at(q) == 0) {
          // q above is 0: p may still be 0 or 1? Filters need upward closure,
          // so p = 1 would force q = 1. Choose p = 0.
          forced = true;
        }
      x.at({i, j}) = (!forced && g.range(0, 1) == 1) ? Rat(1) : Rat(0);
    }
  return x;
}

}  // namespace togglekit
