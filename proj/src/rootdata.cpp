#include "weylkit/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace wk {

uint64_t pack_coords(const IVec& v) {
  uint64_t key = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    i64 x = v[i] + 7;
    assert(x >= 0 && x < 16);
    key |= (uint64_t)x << (4 * i);
  }
  // ranks are <= 8, so 4 bits * 8 coordinates always fit
  return key ^ ((uint64_t)v.size() << 60);
}

RootDatum::RootDatum(char type, int rank) : type_(type), rank_(rank) {
  bool ok = (type == 'A' && rank >= 1) || ((type == 'B' || type == 'C') && rank >= 2) ||
            (type == 'D' && rank >= 4) || (type == 'E' && rank >= 6 && rank <= 8) ||
            (type == 'F' && rank == 4) || (type == 'G' && rank == 2);
  if (!ok || rank > 8)  // rank cap keeps packed coordinate keys in one word
    throw std::invalid_argument("RootDatum: bad type/rank " + label());
  build_cartan();
  build_norms();
  generate_roots();
  build_degrees();
}

void RootDatum::build_cartan() {
  int n = rank_;
  cartan_ = IMat(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto edge = [&](int i, int j) {  // 1-based single bond
    cartan_[i - 1][j - 1] = -1;
    cartan_[j - 1][i - 1] = -1;
  };
  switch (type_) {
    case 'A':
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case 'B':  // a_n short: <a_{n-1}, coroot_n> = -2
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      break;
    case 'C':  // a_n long: <a_n, coroot_{n-1}> = -2
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 2; ++i) edge(i, i + 1);
      edge(n - 2, n - 1);
      edge(n - 2, n);
      break;
    case 'E':
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      edge(4, 5);
      edge(5, 6);
      if (n >= 7) edge(6, 7);
      if (n >= 8) edge(7, 8);
      break;
    case 'F':  // a_1,a_2 long, a_3,a_4 short: <a_2, coroot_3> = -2
      edge(1, 2);
      edge(2, 3);
      edge(3, 4);
      cartan_[2][1] = -2;
      break;
    case 'G':  // a_1 short, a_2 long: <a_2, coroot_1> = -3
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      break;
  }
  cartan_det_ = zmat_det(to_zmat(cartan_));
  // adjugate via rational inverse scaled by det (entries are integers)
  QMat inv = qmat_inverse(to_qmat(cartan_));
  cartan_adj_ = IMat(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat x = inv[i][j] * Rat(cartan_det_);
      if (x.denominator() != 1) throw std::runtime_error("adjugate: non-integral");
      cartan_adj_[i][j] = x.numerator().convert_to<i64>();
    }
}

void RootDatum::build_norms() {
  // d_j / d_i = C[i][j] / C[j][i] along Dynkin edges; scale so min = 1.
  int n = rank_;
  std::vector<Rat> d(n, Rat(0));
  d[0] = Rat(1);
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || cartan_[i][j] == 0 || d[j] != Rat(0)) continue;
      d[j] = d[i] * rat_frac(Int(cartan_[i][j]), Int(cartan_[j][i]));
      todo.push_back(j);
    }
  }
  Rat mn = d[0];
  for (auto& x : d)
    if (x < mn) mn = x;
  simple_norm_.resize(n);
  for (int i = 0; i < n; ++i) {
    Rat x = d[i] / mn;
    if (x.denominator() != 1) throw std::runtime_error("norms: non-integral");
    simple_norm_[i] = x.numerator().convert_to<i64>();
  }
}

void RootDatum::generate_roots() {
  int n = rank_;
  simple_refl_.resize(n);
  for (int i = 0; i < n; ++i) {
    IMat s = imat_identity(n);
    for (int j = 0; j < n; ++j) s[i][j] -= cartan_[i][j];
    simple_refl_[i] = s;
  }

  // close the simple roots under the simple reflections
  std::map<IVec, i64> seen;  // coords -> norm
  std::vector<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    seen[e] = simple_norm_[i];
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec u = queue.back();
    queue.pop_back();
    i64 nu = seen[u];
    for (int i = 0; i < n; ++i) {
      IVec v = imat_apply(simple_refl_[i], u);
      if (seen.emplace(v, nu).second) queue.push_back(v);
    }
  }

  std::vector<Root> pos;
  for (auto& [u, nu] : seen) {
    i64 h = 0;
    for (i64 x : u) h += x;
    assert(h != 0);
    if (h < 0) continue;
    Root r;
    r.a = u;
    r.ht = h;
    r.norm = nu;
    pos.push_back(std::move(r));
  }
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    if (x.ht != y.ht) return x.ht < y.ht;
    return x.a < y.a;
  });
  num_pos_ = pos.size();
  assert(2 * num_pos_ == seen.size());

  IMat ct = imat_transpose(cartan_);
  auto fill = [&](Root& r) {
    r.w = imat_apply(cartan_, r.a);
    r.cor.resize(n);
    for (int i = 0; i < n; ++i) {
      i64 num = r.a[i] * simple_norm_[i];
      assert(num % r.norm == 0);
      r.cor[i] = num / r.norm;
    }
    r.cov = imat_apply(ct, r.cor);
  };
  roots_ = std::move(pos);
  roots_.reserve(2 * num_pos_);
  for (size_t i = 0; i < num_pos_; ++i) {
    Root neg;
    neg.a.resize(n);
    for (int j = 0; j < n; ++j) neg.a[j] = -roots_[i].a[j];
    neg.ht = -roots_[i].ht;
    neg.norm = roots_[i].norm;
    roots_.push_back(std::move(neg));
  }
  for (auto& r : roots_) fill(r);

  index_.reserve(roots_.size());
  for (size_t i = 0; i < roots_.size(); ++i) index_.emplace_back(pack_coords(roots_[i].a), (int)i);
  std::sort(index_.begin(), index_.end());
  // heights are strictly largest at the highest root
  if (num_pos_ >= 2) assert(roots_[num_pos_ - 1].ht > roots_[num_pos_ - 2].ht);
}

int RootDatum::root_index(const IVec& a_coords) const {
  for (i64 x : a_coords)
    if (x < -7 || x > 8) return -1;
  uint64_t key = pack_coords(a_coords);
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(key, -1));
  if (it == index_.end() || it->first != key) return -1;
  return it->second;
}

void RootDatum::build_degrees() {
  // Coxeter element s_1 s_2 ... s_n; its eigenvalues are exp(2*pi*i*e_j / h),
  // so the exponent multiset falls out of the cyclotomic factorization.
  IMat cox = imat_identity(rank_);
  for (int i = 0; i < rank_; ++i) cox = imat_mul(cox, simple_refl_[i]);
  IMat p = cox;
  int h = 1;
  while (!imat_is_identity(p)) {
    p = imat_mul(p, cox);
    ++h;
    if (h > 1000) throw std::runtime_error("coxeter order runaway");
  }
  coxeter_number_ = h;
  ZVec cp = charpoly(to_zmat(cox));
  exponents_.clear();
  for (int d = 1; d <= h; ++d) {
    if (h % d) continue;
    int mult = cyclotomic_multiplicity(cp, d);
    if (!mult) continue;
    for (int j = 1; j <= d; ++j)
      if (gcd_i64(j, d) == 1)
        for (int t = 0; t < mult; ++t) exponents_.push_back(j * h / d);
  }
  std::sort(exponents_.begin(), exponents_.end());
  assert((int)exponents_.size() == rank_);
  degrees_.clear();
  for (int e : exponents_) degrees_.push_back(e + 1);
  assert(degrees_.back() == h);
}

Int RootDatum::weyl_order() const {
  Int w = 1;
  for (int d : degrees_) w *= d;
  return w;
}

Int RootDatum::center_order() const { return cartan_det_ < 0 ? -cartan_det_ : cartan_det_; }

std::vector<int> RootDatum::i_m(int m) const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (degrees_[i] % m == 0) out.push_back(i + 1);
  return out;
}

IMat RootDatum::reflection(int root_idx) const {
  const Root& r = roots_[root_idx];
  IMat s = imat_identity(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s[i][j] -= r.a[i] * r.cov[j];
  return s;
}

IMat RootDatum::word_matrix(const std::vector<int>& word) const {
  IMat m = imat_identity(rank_);
  for (int letter : word) {
    if (letter < 1 || letter > rank_) throw std::invalid_argument("word letter out of range");
    m = imat_mul(m, simple_refl_[letter - 1]);
  }
  return m;
}

}  // namespace wk
