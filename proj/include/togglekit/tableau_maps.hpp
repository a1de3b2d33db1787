#pragma once

#include <utility>
#include <vector>

#include "togglekit/labeling.hpp"
#include "togglekit/toggles.hpp"

namespace togglekit {

// Which side of the shared file a truncated promotion acts on. P acts on the
// region weakly left of (r,s); Q is the transpose conjugate.
enum class Side { P, Q };

// Toggle-level RSK with recording corner (a,b) in [r+1] x [s+1]:
//   RSK_{a,b} = rho^-1_{(a-m+1,b-m+1)} o ... o rho^-1_{(a-1,b-1)} o phi^-1,
// m = min(a,b); rightmost factor applies first. (1,1) degenerates to phi^-1.
Labeling rsk_ab(Labeling x, int a, int b, bool inverse = false);

// RSK at the far corner (r,s).
Labeling rsk(Labeling x, bool inverse = false);
inline Labeling rsk_inverse(Labeling x) { return rsk(std::move(x), true); }

// One half of the image of RSK: the coordinates weakly left of (r,s)
// (i - j >= r - s) for P, weakly right for Q, with values from rsk(x).
struct TableauPart {
  RectShape shape;
  Side side{Side::P};
  std::vector<std::pair<RectCoord, Rat>> entries;  // sorted by coordinate

  friend bool operator==(const TableauPart& a, const TableauPart& b) {
    return a.shape == b.shape && a.side == b.side && a.entries == b.entries;
  }
};

TableauPart p_tableau(const Labeling& x);
TableauPart q_tableau(const Labeling& x);

// Truncated promotion Pro^P_{a,b}: toggles the files of the weakly-left
// region intersected with the ideal [a] x [b], file a-1 first down to
// a-b+1 (empty files skipped). Pro^Q_{a,b} is the transpose conjugate
// of Pro^P_{b,a}. The full promotions are (a,b) = (r,s).
Labeling pro_trunc(Labeling x, Side side, int a, int b, bool inverse = false);
Labeling pro_full(Labeling x, Side side, bool inverse = false);

// Truncated evacuation evac^P_{a,b} = Pro^P_{a,2} o ... o Pro^P_{a,b}
// (rightmost first); evac^Q by transposition; full evacuation is (r,s).
Labeling evac_trunc(Labeling x, Side side, int a, int b, bool inverse = false);
Labeling evac_full(Labeling x, Side side, bool inverse = false);

// Striker-Williams promotion: toggles every file of the full rectangle,
// leftmost file (k = r-1) first down to k = 1-s.
Labeling swpro(Labeling x, bool inverse = false);

// Conjugator E = rho^-1_{(1,s)} o ... o rho^-1_{(r-1,s)} (rightmost first).
Labeling big_e(Labeling x, bool inverse = false);

// Omega = RSK^-1 o Pro^P o RSK.
Labeling omega(Labeling x, bool inverse = false);

}  // namespace togglekit
