#pragma once

#include <string>
#include <vector>

#include "weylkit/rootdata.hpp"

namespace wk {

// c = k/m, kept as given (not reduced): the root-set definitions below
// depend on m itself, while k only scales levels
struct Slope {
  long long k = 1;
  int m = 1;
  Rat c() const { return rat_frac(Int(k), Int(m)); }
};

struct AffineRoot {
  int root;   // index into RootDatum::roots()
  Rat level;  // always an integer multiple of 1/m times k; exact
  bool operator==(const AffineRoot& o) const { return root == o.root && level == o.level; }
};

// positive affine roots vanishing on the slope point: (a, -c ht(a)), m | ht(a)
std::vector<AffineRoot> delta_c_plus(const RootDatum& rd, const Slope& s);
// the weight-one set: (a, c(1-ht(a))) over all roots with ht(a) = 1 mod m;
// carries both signs of a, one member per qualifying finite root
std::vector<AffineRoot> frak_d_c(const RootDatum& rd, const Slope& s);
// simple system of delta_c_plus
std::vector<AffineRoot> pi_c(const RootDatum& rd, const Slope& s);

// affine Weyl element (and its alcove) as linear part + coroot translation,
// both acting on coweight coordinates; word holds the wall-crossing letters
struct Alcove {
  IMat lin;
  IVec tr;
  std::vector<int> word;  // letters in 0..n, 0 = affine reflection
  std::string name() const;
  bool operator==(const Alcove& o) const { return lin == o.lin && tr == o.tr; }
};

Alcove fundamental_alcove(const RootDatum& rd);
Alcove alcove_step(const RootDatum& rd, const Alcove& a, int letter);
// interior point w(rho_vee / h); exact, never on an affine wall
QVec alcove_center(const RootDatum& rd, const Alcove& a);
Rat eval_affine(const RootDatum& rd, const AffineRoot& ar, const QVec& x);

bool in_wc(const RootDatum& rd, const Slope& s, const Alcove& a);
// members of frak_d_c negative at the alcove center
std::vector<AffineRoot> frak_d_cw(const RootDatum& rd, const Slope& s, const Alcove& a);

// all alcoves within the given word length, breadth-first (deterministic)
std::vector<Alcove> enumerate_alcoves(const RootDatum& rd, int radius);

// exact emptiness test for {x != 0 : sign_i * (a_i . x) >= 0} by
// Fourier-Motzkin elimination; true means the clan region is bounded
bool recession_cone_trivial(const RootDatum& rd, const std::vector<AffineRoot>& dc,
                            const std::vector<int>& signs);

struct Clan {
  std::vector<int> sign_vector;      // over frak_d_c, entries +1/-1
  std::vector<std::string> members;  // alcove names in discovery order
  std::vector<size_t> member_idx;    // indices into the table's alcove list
  bool bounded = false;
};

struct ClanTable {
  std::vector<AffineRoot> dc;
  std::vector<Alcove> wc_alcoves;  // the W^c alcoves within the radius
  std::vector<Clan> clans;         // ordered by first member discovery
};

ClanTable enumerate_clans(const RootDatum& rd, const Slope& s, int radius);

// |frak_d_cw| >= n_c over the zero-translation W^c alcoves, with equality
// only at the fundamental alcove
struct WeightBoundReport {
  bool pass = false;
  int n_c = 0;
  size_t checked = 0;
  std::string counterexample;  // empty when pass
};

WeightBoundReport check_335a(const RootDatum& rd, const Slope& s, int radius);

}  // namespace wk
