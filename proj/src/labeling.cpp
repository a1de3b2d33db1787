#include "togglekit/labeling.hpp"

namespace togglekit {

Labeling Labeling::from_rows(Realm realm, const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty labeling literal");
  RectShape shape{static_cast<int>(rows.size()), static_cast<int>(rows[0].size())};
  Labeling x(shape, realm);
  for (int i = 1; i <= shape.r; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != shape.s)
      throw std::invalid_argument("ragged labeling literal");
    for (int j = 1; j <= shape.s; ++j) x.at({i, j}) = rows[i - 1][j - 1];
  }
  if (realm == Realm::Birational && !x.positive())
    throw std::invalid_argument("birational labeling must be strictly positive");
  return x;
}

Labeling stack(const Labeling& x1, const Labeling& x2) {
  if (x1.shape().s != x2.shape().s)
    throw std::invalid_argument("stack needs equal down-diagonal counts");
  if (x1.realm() != x2.realm()) throw std::invalid_argument("stack needs a common realm");
  RectShape shape{x1.shape().r + x2.shape().r, x1.shape().s};
  Labeling out(shape, x1.realm());
  for (int i = 1; i <= x1.shape().r; ++i)
    for (int j = 1; j <= shape.s; ++j) out.at({i, j}) = x1.at({i, j});
  for (int t = 1; t <= x2.shape().r; ++t)
    for (int j = 1; j <= shape.s; ++j) out.at({x1.shape().r + t, j}) = x2.at({t, j});
  return out;
}

Labeling dual_star(const Labeling& x) {
  RectShape shape = x.shape();
  Labeling out(shape, x.realm());
  for (int i = 1; i <= shape.r; ++i)
    for (int j = 1; j <= shape.s; ++j)
      out.at({i, j}) = x.at({shape.r + 1 - i, shape.s + 1 - j});
  return out;
}

Labeling transpose_of(const Labeling& x) {
  RectShape shape = x.shape();
  Labeling out(shape.transposed(), x.realm());
  for (int i = 1; i <= shape.r; ++i)
    for (int j = 1; j <= shape.s; ++j) out.at({j, i}) = x.at({i, j});
  return out;
}

Labeling project(const Labeling& x, int a, int b) {
  if (a < 1 || a > x.shape().r || b < 1 || b > x.shape().s)
    throw std::invalid_argument("projection corner outside shape");
  Labeling out(RectShape{a, b}, x.realm());
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) out.at({i, j}) = x.at({i, j});
  return out;
}

bool is_filter_indicator(const Labeling& x) {
  if (x.realm() != Realm::PL) return false;
  RectShape shape = x.shape();
  for (int i = 1; i <= shape.r; ++i)
    for (int j = 1; j <= shape.s; ++j) {
      const Rat& v = x.at({i, j});
      if (v != 0 && v != 1) return false;
    }
  // Upward closure: a 1 must see 1s at both covers above.
  for (int i = 1; i <= shape.r; ++i)
    for (int j = 1; j <= shape.s; ++j)
      if (x.at({i, j}) == 1)
        for (RectCoord q : covers_above(shape, {i, j}))
          if (x.at(q) != 1) return false;
  return true;
}

}  // namespace togglekit
