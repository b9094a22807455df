#pragma once

// Exact verification of the defining relations of the degenerate double
// affine Hecke algebra against explicit finite-dimensional modules.
//
// The algebra is generated by the affine Weyl group and pairwise-commuting
// symbols xi_lambda, lambda in X0 + Z*delta, subject to
//
//   xi_delta = 1,   xi additive in lambda,
//   xi_lambda s_i - s_i xi_{s_i(lambda)} = -c (lambda . coroot_i).
//
// A module hands us one matrix per affine generator and one matrix per
// basis weight (o_1..o_n, delta); everything is checked by exact rational
// matrix identities.

#include <string>
#include <vector>

#include "weylkit/numtypes.hpp"
#include "weylkit/rootdata.hpp"

namespace wk {

// The s_i action on X0 + Z*delta in the basis (o_1..o_n, delta), together
// with the pairing row lambda . coroot_i used by the cross relation.
// s[0] is the affine reflection: (mu, l) -> (s_theta mu, l + mu.theta_check),
// and lambda . coroot_0 = -mu . theta_check.
struct AffinePresentation {
  int n = 0;                      // finite rank
  std::vector<IMat> s;            // index 0..n, each (n+1) x (n+1)
  std::vector<IVec> coroot_pair;  // row i: functional on (w-coords, delta)
  IMat cox;                       // orders of s_i s_j; 0 marks infinite
};

AffinePresentation affine_presentation(const RootDatum& rd);

struct ModuleData {
  std::string name;
  char type = 0;
  int rank = 0;
  Rat c;
  int dim = 0;
  std::vector<QMat> S;   // index 0..rank
  std::vector<QMat> Xi;  // index 0..rank-1 for o_{j+1}, index rank for delta
};

struct RelationReport {
  bool pass = false;
  std::string failed;  // first failing relation, empty on pass
};

// Checks, in order: involutions, braid relations, commutativity of the Xi,
// Xi_delta = 1, and the cross relation for every generator and basis weight.
// Throws std::invalid_argument on inconsistent dimensions.
RelationReport verify_module(const AffinePresentation& p, const ModuleData& m);

// The explicitly known modules: the one-dimensional sign module at c = 1/h
// and trivial module at c = -1/h for several types, the two C2 modules at
// c = 1/2 with one affine generator acting by +1, and the G2 modules of
// dimensions 2 (c = 1/3) and 3 (c = 1/2).
std::vector<ModuleData> builtin_modules();

// Interchange format: {name?, type, rank, c, dim, S: {"0": M, ...},
// Xi: {"o1": M, ..., "delta": M}} with entries "p/q" strings or integers.
ModuleData module_from_json(const std::string& text);
std::string module_to_json(const ModuleData& m);

}  // namespace wk
