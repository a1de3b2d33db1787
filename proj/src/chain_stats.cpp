#include "togglekit/chain_stats.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>

#include "togglekit/tableau_maps.hpp"

namespace togglekit {

namespace {

void validate_rect(const Labeling& x, const PathFamilySpec& spec) {
  const RectShape shape = x.shape();
  if (!(1 <= spec.u1 && spec.u1 <= spec.u2 && spec.u2 <= shape.r &&
        1 <= spec.v1 && spec.v1 <= spec.v2 && spec.v2 <= shape.s))
    throw std::out_of_range("path-family rectangle outside shape");
  if (spec.k < 0) throw std::invalid_argument("negative path count");
}

int clamp_k(const PathFamilySpec& spec) {
  return std::min(spec.k, std::min(spec.u2 - spec.u1 + 1, spec.v2 - spec.v1 + 1));
}

// compose-fold of x over row i, columns c1..c2 inclusive.
Rat row_segment(const Labeling& x, int i, int c1, int c2) {
  Rat acc = x.at({i, c1});
  for (int c = c1 + 1; c <= c2; ++c) acc = compose_op(x.realm(), acc, x.at({i, c}));
  return acc;
}

// down_combine-accumulate into an optional slot.
void accumulate(Realm realm, std::optional<Rat>& slot, const Rat& value) {
  slot = slot ? down_combine(realm, *slot, value) : value;
}

}  // namespace

Rat max_weight(const Labeling& x, PathFamilySpec spec) {
  validate_rect(x, spec);
  const Realm realm = x.realm();
  const int k = clamp_k(spec);
  if (k == 0) return empty_down_unit(realm);

  // Lockstep DP over up-diagonals u1..u2. A state is the k-tuple of exit
  // columns (strictly increasing); path t occupies the column interval
  // [entry_t, exit_t] on the current row, and disjointness is
  // exit_t < entry_{t+1}.
  using State = std::vector<int>;
  std::map<State, Rat> layer;

  // Row u1: entries are pinned at v1..v1+k-1, so paths 1..k-1 exit where
  // they start; only the last path may run east.
  for (int f = spec.v1 + k - 1; f <= spec.v2; ++f) {
    State st(k);
    Rat w = empty_down_unit(realm);
    bool first = true;
    for (int t = 0; t < k - 1; ++t) {
      st[t] = spec.v1 + t;
      Rat seg = row_segment(x, spec.u1, st[t], st[t]);
      w = first ? seg : compose_op(realm, w, seg);
      first = false;
    }
    st[k - 1] = f;
    Rat seg = row_segment(x, spec.u1, spec.v1 + k - 1, f);
    w = first ? seg : compose_op(realm, w, seg);
    auto it = layer.find(st);
    if (it == layer.end()) layer.emplace(st, w);
    else it->second = down_combine(realm, it->second, w);
  }

  for (int i = spec.u1 + 1; i <= spec.u2; ++i) {
    const bool last = i == spec.u2;
    std::map<State, Rat> next;
    for (const auto& [entries, weight] : layer) {
      // Choose exits g with g_t in [entries_t, entries_{t+1}) and g_k free.
      State exits(k);
      auto recurse = [&](auto&& self, int t, Rat acc, bool have_acc) -> void {
        if (t == k) {
          Rat total = have_acc ? compose_op(realm, weight, acc) : weight;
          auto it = next.find(exits);
          if (it == next.end()) next.emplace(exits, total);
          else it->second = down_combine(realm, it->second, total);
          return;
        }
        int lo = entries[t];
        int hi = t + 1 < k ? entries[t + 1] - 1 : spec.v2;
        if (last) {
          int forced = spec.v2 - k + t + 1;
          if (forced < lo || forced > hi) return;
          lo = hi = forced;
        }
        for (int g = lo; g <= hi; ++g) {
          exits[t] = g;
          Rat seg = row_segment(x, i, entries[t], g);
          self(self, t + 1, have_acc ? compose_op(realm, acc, seg) : seg, true);
        }
      };
      recurse(recurse, 0, Rat(0), false);
    }
    layer = std::move(next);
  }

  State goal(k);
  for (int t = 0; t < k; ++t) goal[t] = spec.v2 - k + t + 1;
  auto it = layer.find(goal);
  if (it == layer.end()) throw std::logic_error("empty path family after clamping");
  return it->second;
}

namespace {

struct RectGrid {
  int u1, v1, u2, v2;
  int width() const { return v2 - v1 + 1; }
  int height() const { return u2 - u1 + 1; }
  int bit(int i, int j) const { return (i - u1) * width() + (j - v1); }
};

// All monotone paths start -> end, as bitmasks over the rectangle.
void enumerate_paths(const RectGrid& g, int i, int j, int ei, int ej, unsigned long long mask,
                     std::vector<unsigned long long>& out) {
  mask |= 1ULL << g.bit(i, j);
  if (i == ei && j == ej) {
    out.push_back(mask);
    return;
  }
  if (i < ei) enumerate_paths(g, i + 1, j, ei, ej, mask, out);
  if (j < ej) enumerate_paths(g, i, j + 1, ei, ej, mask, out);
}

Rat mask_weight(const Labeling& x, const RectGrid& g, unsigned long long mask) {
  std::optional<Rat> acc;
  for (int i = g.u1; i <= g.u2; ++i)
    for (int j = g.v1; j <= g.v2; ++j)
      if (mask >> g.bit(i, j) & 1ULL) {
        Rat v = x.at({i, j});
        acc = acc ? compose_op(x.realm(), *acc, v) : v;
      }
  return *acc;
}

}  // namespace

int max_cells_guard(int fallback) {
  if (const char* env = std::getenv("TOGGLEKIT_MAX_CELLS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return fallback;
}

Rat brute_force_max_weight(const Labeling& x, PathFamilySpec spec) {
  validate_rect(x, spec);
  const Realm realm = x.realm();
  const int k = clamp_k(spec);
  if (k == 0) return empty_down_unit(realm);

  RectGrid g{spec.u1, spec.v1, spec.u2, spec.v2};
  if (g.width() * g.height() > max_cells_guard(20))
    throw std::length_error("path oracle rectangle exceeds cell guard");

  std::vector<std::vector<unsigned long long>> paths(k);
  for (int t = 0; t < k; ++t)
    enumerate_paths(g, spec.u1, spec.v1 + t, spec.u2, spec.v2 - k + t + 1, 0, paths[t]);

  std::optional<Rat> best;
  std::vector<unsigned long long> chosen(k);
  auto recurse = [&](auto&& self, int t, unsigned long long used) -> void {
    if (t == k) {
      std::optional<Rat> w;
      for (int q = 0; q < k; ++q) {
        Rat pw = mask_weight(x, g, chosen[q]);
        w = w ? compose_op(realm, *w, pw) : pw;
      }
      accumulate(realm, best, *w);
      return;
    }
    for (unsigned long long mask : paths[t]) {
      if (mask & used) continue;
      chosen[t] = mask;
      self(self, t + 1, used | mask);
    }
  };
  recurse(recurse, 0, 0ULL);
  if (!best) throw std::logic_error("no disjoint path family exists after clamping");
  return *best;
}

Rat greene_boundary(const Labeling& x, int i, int j, int k) {
  const RectShape shape = x.shape();
  if (!shape.contains({i, j})) throw std::out_of_range("boundary coordinate outside shape");
  if (i != shape.r && j != shape.s)
    throw std::invalid_argument("greene boundary needs i = r or j = s");
  if (k < 1 || k > std::min(i, j)) throw std::out_of_range("greene boundary k out of range");
  Labeling image = rsk(x);
  Rat acc = image.at({i, j});
  for (int t = 1; t <= k - 1; ++t)
    acc = compose_op(x.realm(), acc, image.at({i - t, j - t}));
  return acc;
}

}  // namespace togglekit
