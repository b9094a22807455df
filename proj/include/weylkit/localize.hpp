#pragma once

#include <string>

#include "weylkit/affine.hpp"
#include "weylkit/weylgrp.hpp"

namespace wk {

// finite reflection data attached to a slope: the group generated by the
// reflections in the finite parts of the vanishing-level roots
struct SlopeChamber {
  Slope s;
  int n_c = 0;
  std::vector<int> dplus;  // finite parts of delta_c_plus, as root indices
  ReflSubgroup wc;
};

SlopeChamber slope_chamber(const RootDatum& rd, const Slope& s, size_t budget = 2000000);

// (-1)^{n_c} |A_m_circ| prod(delta_c_plus) = sum over W_c of det(w) w(prod D_c,1),
// checked at one generic integer point plus independent redraws
struct Identity334 {
  bool verified = false;  // enumeration within budget and all samples computed
  bool holds = false;
  std::string detail;
};

Identity334 verify_334(const RootDatum& rd, const Slope& s, uint64_t seed = 12345);

// fixed points of the torus action on the fiber over the alcove;
// requires |D_{c,w}| == n_c
Int point_count(const RootDatum& rd, const Slope& s, const Alcove& a, uint64_t seed = 12345);

// Euler characteristic of the fiber over the alcove; requires |D_{c,w}| <= n_c
Int chi_fiber(const RootDatum& rd, const Slope& s, const Alcove& a, uint64_t seed = 12345);

struct ChiTotal {
  Int total = 0;
  size_t wc_alcoves = 0;      // alcoves of the slope chamber within the radius
  bool frontier_clear = false;  // every outermost-shell alcove contributed 0
};

// sum of chi_fiber over the slope-chamber alcoves within the radius; alcoves
// with |D_{c,w}| > n_c carry empty fibers and contribute 0
ChiTotal total_chi(const RootDatum& rd, const Slope& s, int radius, uint64_t seed = 12345);

}  // namespace wk
