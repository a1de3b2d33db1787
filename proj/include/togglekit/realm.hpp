#pragma once

#include <stdexcept>
#include <string>

#include "togglekit/rational.hpp"

namespace togglekit {

// The piecewise-linear realm works over all exact rationals with
// (min, max, +, -); the birational realm detropicalizes to positive
// rationals with (parallel sum, +, *, /). Every map in the library is
// written once against these five operations and the two units.
enum class Realm { PL, Birational };

inline std::string realm_str(Realm realm) {
  return realm == Realm::PL ? "PL" : "Birational";
}

inline Realm parse_realm(const std::string& text) {
  if (text == "PL") return Realm::PL;
  if (text == "Birational") return Realm::Birational;
  throw std::invalid_argument("unknown realm: " + text);
}

// PL: min(a,b).  Birational: parallel sum (a^-1 + b^-1)^-1 = ab/(a+b).
inline Rat up_combine(Realm realm, const Rat& a, const Rat& b) {
  if (realm == Realm::PL) return min_rat(a, b);
  return (a * b) / (a + b);
}

// PL: max(a,b).  Birational: a + b.
inline Rat down_combine(Realm realm, const Rat& a, const Rat& b) {
  if (realm == Realm::PL) return max_rat(a, b);
  return a + b;
}

// PL: a + b.  Birational: a * b.
inline Rat compose_op(Realm realm, const Rat& a, const Rat& b) {
  if (realm == Realm::PL) return a + b;
  return a * b;
}

// PL: a - b.  Birational: a / b.
inline Rat invert_against(Realm realm, const Rat& a, const Rat& b) {
  if (realm == Realm::PL) return a - b;
  if (b == 0) throw std::domain_error("birational division by zero");
  return a / b;
}

// Unit returned for an empty up-neighbour combine (PL empty min).
inline Rat empty_up_unit(Realm realm) {
  (void)realm;
  return Rat(1);
}

// Unit returned for an empty down-neighbour combine (PL empty max);
// also the neutral element of down_combine's PL reading at 0 and the
// birational empty-sum convention 1.
inline Rat empty_down_unit(Realm realm) {
  return realm == Realm::PL ? Rat(0) : Rat(1);
}

}  // namespace togglekit
