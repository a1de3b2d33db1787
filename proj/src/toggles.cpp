#include "togglekit/toggles.hpp"

#include <algorithm>
#include <optional>

namespace togglekit {

namespace {

// Fold a realm combine over the values of x at the given cells; nullopt when
// there are none, so callers can substitute the right unit.
std::optional<Rat> fold_up(const Labeling& x, const std::vector<RectCoord>& cells) {
  std::optional<Rat> acc;
  for (RectCoord q : cells) acc = acc ? up_combine(x.realm(), *acc, x.at(q)) : x.at(q);
  return acc;
}

std::optional<Rat> fold_down(const Labeling& x, const std::vector<RectCoord>& cells) {
  std::optional<Rat> acc;
  for (RectCoord q : cells) acc = acc ? down_combine(x.realm(), *acc, x.at(q)) : x.at(q);
  return acc;
}

}  // namespace

Labeling toggle(Labeling x, RectCoord p) {
  const Realm realm = x.realm();
  const RectShape shape = x.shape();
  Rat up = fold_up(x, covers_above(shape, p)).value_or(empty_up_unit(realm));
  Rat down = fold_down(x, covers_below(shape, p)).value_or(empty_down_unit(realm));
  x.at(p) = compose_op(realm, invert_against(realm, up, x.at(p)), down);
  return x;
}

Labeling rowmotion(Labeling x, const Region& region, bool inverse) {
  std::vector<RectCoord> order = linear_extension(x.shape(), resolve_region(x.shape(), region));
  if (inverse) std::reverse(order.begin(), order.end());
  for (RectCoord p : order) x = toggle(std::move(x), p);
  return x;
}

Labeling transfer(const Labeling& x) {
  const Realm realm = x.realm();
  Labeling out(x.shape(), realm);
  for (int i = 1; i <= x.shape().r; ++i)
    for (int j = 1; j <= x.shape().s; ++j) {
      RectCoord p{i, j};
      Rat down = fold_down(x, covers_below(x.shape(), p)).value_or(empty_down_unit(realm));
      out.at(p) = invert_against(realm, x.at(p), down);
    }
  return out;
}

Labeling transfer_inverse(const Labeling& x) {
  const Realm realm = x.realm();
  Labeling out(x.shape(), realm);
  // Ascending rank is a linear extension, so lower covers are ready.
  for (int rank = 2; rank <= x.shape().r + x.shape().s; ++rank)
    for (int i = 1; i <= x.shape().r; ++i) {
      int j = rank - i;
      if (j < 1 || j > x.shape().s) continue;
      RectCoord p{i, j};
      Rat down = fold_down(out, covers_below(x.shape(), p)).value_or(empty_down_unit(realm));
      out.at(p) = compose_op(realm, x.at(p), down);
    }
  return out;
}

}  // namespace togglekit
