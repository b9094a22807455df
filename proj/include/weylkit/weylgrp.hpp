#pragma once

// Weyl group elements and the machinery around regular elliptic classes:
// orders, spectra, certification, discovery of the elliptic numbers,
// centralizers via conjugacy-class BFS, and reflection subgroups.

#include "weylkit/rootdata.hpp"

#include <optional>

namespace wk {

// order of a finite-order integer matrix; throws after a cap of 512
int elt_order(const IMat& m);
int elt_det(const IMat& m);  // +1 or -1
// no fixed vectors, i.e. det(1 - w) != 0
bool is_elliptic(const IMat& w);
// dimension of the zeta_m eigenspace = multiplicity of the m-th cyclotomic
// polynomial in the characteristic polynomial
int eigenspace_dim(const IMat& w, int m);
// regular elliptic of order m: order m, elliptic, and the zeta_m eigenspace
// has the maximal dimension #I_m (which must be positive)
bool certify_elliptic_regular(const RootDatum& rd, const IMat& w, int m);

// canonical u64 key: the images of the simple roots as root indices
uint64_t elt_key(const RootDatum& rd, const IMat& w);

// The m >= 2 admitting a regular elliptic element: m divides equally many
// degrees as codegrees (at least one), and divides no exponent.
std::vector<int> elliptic_numbers(const RootDatum& rd);
// Independent oracle: scan the whole group, certifying element by element.
// Refuses groups larger than the cap (default covers |W| <= 51840).
std::vector<int> elliptic_numbers_exhaustive(const RootDatum& rd, size_t cap = 60000);

// Deterministic seed words whose powers hit all classes outside the even
// D_n family: the Coxeter word plus the handful of exceptional-type words.
std::vector<std::vector<int>> seed_words(const RootDatum& rd);

// A certified regular elliptic element of order m: tries powers of the seed
// words, then a seeded random search.  nullopt if nothing certifies.
std::optional<IMat> elliptic_rep(const RootDatum& rd, int m, uint64_t seed = 1);

// Cayley closure of a generating set; nullopt if the budget is exceeded.
std::optional<std::vector<IMat>> subgroup_closure(const RootDatum& rd,
                                                  const std::vector<IMat>& gens, size_t budget);

struct Centralizer {
  Int order = 0;
  Int class_size = 0;          // filled by the BFS path
  std::vector<IMat> gens;      // generators of the centralizer
  std::vector<IMat> elements;  // filled when the group itself was enumerated
  bool verified = false;       // order confirmed by |W|/|class| (or a shortcut; see method)
  std::string method;          // "central" | "cyclic" | "class-bfs" | "budget-exceeded"
};

// Centralizer of a regular elliptic element.  Strategy: central shortcut,
// then <w, -1> against the degree-product oracle, then conjugacy-class BFS
// with Schreier-generator harvesting (class size |W|/prod d_i; the largest
// E8 cases need class_budget ~4e6 and sit behind a --deep flag upstream).
Centralizer centralizer(const RootDatum& rd, const IMat& w, size_t class_budget = 250000);

struct ReflSubgroup {
  std::vector<int> simple_idx;  // a simple system for the generated subsystem
  std::string cartan_type;      // e.g. "A2+A2+A2"; "1" for the empty system
  Int order = 1;
  std::vector<IMat> elements;
  std::vector<int> dets;  // parallel to elements
  bool enumerated = false;
};

// Subgroup generated by the reflections in the given roots (indices into
// rd.roots()); closes the set into a subsystem, extracts a simple system,
// recognizes the Cartan type and enumerates when within budget.
ReflSubgroup reflection_subgroup(const RootDatum& rd, const std::vector<int>& root_idx,
                                 size_t budget = 2000000);

}  // namespace wk
