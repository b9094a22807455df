#pragma once

#include <string>
#include <vector>

#include "weylkit/rootdata.hpp"
#include "weylkit/weylgrp.hpp"

namespace wk {

// Smith normal form: u * m * v = diag(diagonal), u and v unimodular.
// diagonal entries are nonnegative and form a divisibility chain.
struct SmithForm {
  ZMat u, v;
  std::vector<Int> diagonal;
};

SmithForm snf(const ZMat& m);

// finite abelian quotient L / im(M), for square nonsingular M over a lattice L
struct FinAbGroup {
  std::vector<Int> snf_diagonal;       // full chain, including 1s
  std::vector<Int> invariant_factors;  // the entries >= 2
  ZMat projection;                     // lattice vector -> tuple, one row per factor
  Int order() const;
  std::string iso_label() const;  // "1", "Z/6", "(Z/2)^2 x Z/4", ...
  // tuple of x, reduced to [0, e_j); x in the ambient lattice basis
  std::vector<Int> project(const ZVec& x) const;
};

FinAbGroup cokernel_group(const ZMat& m);

// A_m = P/(1-w)P: tuples are taken in the weight basis
FinAbGroup a_m(const RootDatum& rd, const IMat& w);
// A_m° = Q/(1-w)P: tuples are taken in the root basis
FinAbGroup a_m_circ(const RootDatum& rd, const IMat& w);

// centralizer generators acting on the tuples of a_m_circ
struct LatticeAction {
  std::vector<Int> mod;    // invariant factors (>= 2)
  std::vector<ZMat> gens;  // action matrices reduced mod the factors
};

LatticeAction quotient_action(const RootDatum& rd, const IMat& w, const std::vector<IMat>& zgens);

// orbit sizes (ascending) of the centralizer action on all of A_m°
std::vector<Int> orbit_decomposition(const LatticeAction& act);
std::vector<Int> orbit_decomposition(const RootDatum& rd, const IMat& w, const Centralizer& z);

}  // namespace wk
