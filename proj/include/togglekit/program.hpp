#pragma once

#include <string>
#include <vector>

#include "togglekit/tableau_maps.hpp"

namespace togglekit {

// One named map of the mini-language. Truncated pro/evac/rsk steps carry
// (a,b); rho carries a region in region_str syntax.
enum class StepKind {
  Rsk,        // rsk | rsk[a=..,b=..]
  Phi,        // phi
  ProTrunc,   // proP[a=..,b=..] / proQ[..]
  ProFull,    // proP / proQ
  EvacTrunc,  // evacP[a=..,b=..] / evacQ[..]
  EvacFull,   // evacP / evacQ
  Swpro,      // swpro
  BigE,       // E
  Omega,      // omega
  Rho,        // rho[<region>]
};

struct MapStep {
  StepKind kind{StepKind::Rsk};
  Side side{Side::P};  // pro/evac variants
  bool truncated{false};
  int a{0}, b{0};
  Region region{Region::full()};
  bool inverse{false};

  friend bool operator==(const MapStep& x, const MapStep& y) {
    return x.kind == y.kind && x.side == y.side && x.truncated == y.truncated && x.a == y.a &&
           x.b == y.b && x.region == y.region && x.inverse == y.inverse;
  }
};

// Steps in written (paper) order: the rightmost step is applied first.
struct MapProgram {
  std::vector<MapStep> steps;

  MapProgram inverted() const;  // reversed order, flipped inverse flags

  friend bool operator==(const MapProgram& x, const MapProgram& y) { return x.steps == y.steps; }
};

// Parses "swpro.rsk^-1.proP[a=3,b=2]" style text ('.' = composition as
// written in the paper). Accepts keyed "[a=3,b=2]" and bare "[3,2]" argument
// lists. Throws std::invalid_argument on malformed text.
MapProgram parse_program(const std::string& text);
std::string format_program(const MapProgram& prog);

// Region argument syntax shared with region_str: full, ideal=(i,j),
// ideals=(i,j);(k,l), cells=(i,j);(k,l), file=k, rank=k, updiag=i, downdiag=j.
Region parse_region(const std::string& text);

Labeling apply_step(const Labeling& x, const MapStep& step);
Labeling apply_program(const Labeling& x, const MapProgram& prog);

}  // namespace togglekit
