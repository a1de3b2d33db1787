#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace togglekit {

// Exact rational scalar used everywhere. GMP keeps values canonical
// (lowest terms, denominator > 0) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat v(num, den);
  v.canonicalize();
  return v;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision components.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat v;
  // mpq set_str accepts "num/den"; validate by round-trip return code.
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (v.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  v.canonicalize();
  return v;
}

// Canonical text form: "p" when integral, else "p/q" in lowest terms.
inline std::string rat_str(const Rat& v) { return v.get_str(); }

inline const Rat& min_rat(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace togglekit
