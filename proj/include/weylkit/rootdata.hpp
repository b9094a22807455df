#pragma once

// Root systems of the finite crystallographic types, with exact integer data.
//
// Everything downstream works in the simple-root basis: a Weyl group element
// is the integer matrix whose column j is the image of the simple root a_j.
// The Cartan matrix convention is C[i][j] = <a_j, coroot_i>, so the
// fundamental-weight coordinates of a root are C * (its simple coordinates).
// Indices: simple roots are 1..n in the API (0-based internally for storage),
// roots are 0-based into roots(), positives first sorted by (height, lex),
// and the negative of roots()[i] sits at i + num_pos().

#include "weylkit/numtypes.hpp"

namespace wk {

struct Root {
  IVec a;    // simple-root coordinates
  IVec w;    // fundamental-weight coordinates (= C * a)
  IVec cor;  // coroot in simple-coroot coordinates
  IVec cov;  // coroot in fundamental-coweight coordinates; cov[j] = <a_j+1, coroot>
  i64 ht;    // height (sum of simple coordinates)
  i64 norm;  // half squared length, short roots normalized to 1
};

class RootDatum {
 public:
  // type in {'A','B','C','D','E','F','G'}; throws std::invalid_argument on a
  // rank outside the type's range (A>=1, B/C>=2, D>=4, E 6..8, F 4, G 2).
  RootDatum(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const IMat& cartan() const { return cartan_; }
  const IMat& cartan_inv_num() const { return cartan_adj_; }  // adj(C): C^{-1} = adj/det
  Int cartan_det() const { return cartan_det_; }

  int num_pos() const { return (int)num_pos_; }
  const std::vector<Root>& roots() const { return roots_; }
  // Index of a root given simple-root coordinates; -1 if not a root.
  int root_index(const IVec& a_coords) const;
  int negate_index(int idx) const {
    return idx < (int)num_pos_ ? idx + (int)num_pos_ : idx - (int)num_pos_;
  }
  const Root& highest_root() const { return roots_[num_pos_ - 1]; }
  int highest_root_index() const { return (int)num_pos_ - 1; }

  // Degrees d_1 <= ... <= d_n recovered from the Coxeter element's
  // characteristic polynomial; exponents() = degrees() - 1, same order.
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int coxeter_number() const { return coxeter_number_; }
  Int weyl_order() const;    // product of the degrees
  Int center_order() const;  // |det C|

  // 1-based positions i with m | d_i.
  std::vector<int> i_m(int m) const;

  // Reflections as matrices on the simple-root basis (column convention).
  const IMat& simple_reflection(int i) const { return simple_refl_[i - 1]; }  // i in 1..n
  IMat reflection(int root_idx) const;

  // Product of simple reflections for a word with 1-based letters.
  IMat word_matrix(const std::vector<int>& word) const;

 private:
  void build_cartan();
  void build_norms();
  void generate_roots();
  void build_degrees();

  char type_;
  int rank_;
  IMat cartan_;
  IMat cartan_adj_;
  Int cartan_det_;
  std::vector<i64> simple_norm_;
  std::vector<Root> roots_;
  size_t num_pos_ = 0;
  std::vector<IMat> simple_refl_;
  std::vector<int> degrees_, exponents_;
  int coxeter_number_ = 0;
  // lookup: packed simple coordinates -> index
  std::vector<std::pair<uint64_t, int>> index_;  // sorted
};

// packs coordinates in [-7, 8] into nibbles (valid for all root systems here)
uint64_t pack_coords(const IVec& v);

}  // namespace wk
