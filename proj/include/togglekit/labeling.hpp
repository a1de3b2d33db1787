#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "togglekit/poset.hpp"
#include "togglekit/rational.hpp"
#include "togglekit/realm.hpp"

namespace togglekit {

// An assignment of exact rationals to the cells of [r] x [s], tagged with
// the realm its values are meant to live in. Birational labelings must be
// strictly positive; PL labelings are unrestricted.
class Labeling {
 public:
  Labeling() = default;
  Labeling(RectShape shape, Realm realm)
      : shape_(shape), realm_(realm), vals_(static_cast<size_t>(shape.r) * static_cast<size_t>(shape.s),
                                            realm == Realm::Birational ? Rat(1) : Rat(0)) {
    if (shape.r < 1 || shape.s < 1) throw std::invalid_argument("labeling shape must be >= 1x1");
  }

  // Row-major literal: rows[i-1][j-1].
  static Labeling from_rows(Realm realm, const std::vector<std::vector<Rat>>& rows);

  RectShape shape() const { return shape_; }
  Realm realm() const { return realm_; }

  const Rat& at(RectCoord p) const { return vals_[index(p)]; }
  Rat& at(RectCoord p) { return vals_[index(p)]; }

  bool positive() const {
    for (const Rat& v : vals_)
      if (v <= 0) return false;
    return true;
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.shape_ == b.shape_ && a.realm_ == b.realm_ && a.vals_ == b.vals_;
  }
  friend bool operator!=(const Labeling& a, const Labeling& b) { return !(a == b); }

 private:
  size_t index(RectCoord p) const {
    if (!shape_.contains(p)) throw std::out_of_range("labeling coordinate outside shape");
    return static_cast<size_t>((p.i - 1) * shape_.s + (p.j - 1));
  }

  RectShape shape_{1, 1};
  Realm realm_{Realm::PL};
  std::vector<Rat> vals_{Rat(0)};
};

// x1 over x2 on the shared down-diagonal count s: result has r1 + r2
// up-diagonals, with x1 occupying rows 1..r1 and row t of x2 landing on
// row r1 + t.
Labeling stack(const Labeling& x1, const Labeling& x2);

// x*_{ij} = x_{r+1-i, s+1-j} (180-degree rotation; same shape).
Labeling dual_star(const Labeling& x);

// Transpose onto [s] x [r]: (i,j) -> (j,i).
Labeling transpose_of(const Labeling& x);

// Restriction to the ideal [a] x [b].
Labeling project(const Labeling& x, int a, int b);

// The combinatorial realm is the PL realm restricted to 0/1 vectors that are
// indicator functions of order filters (x_p = 1 and q >= p implies x_q = 1).
bool is_filter_indicator(const Labeling& x);

}  // namespace togglekit
