#include "weylkit/torsion.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace wk {

namespace {

void add_row(ZMat& m, size_t dst, size_t src, const Int& f) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_col(ZMat& m, size_t dst, size_t src, const Int& f) {
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

void swap_cols(ZMat& m, size_t a, size_t b) {
  for (size_t i = 0; i < m.size(); ++i) std::swap(m[i][a], m[i][b]);
}

// quotient with |a - q*b| <= |b|/2, so remainders at least halve
Int div_nearest(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

}  // namespace

SmithForm snf(const ZMat& m0) {
  size_t rows = m0.size(), cols = rows ? m0[0].size() : 0;
  SmithForm s;
  s.u = ZMat(rows, ZVec(rows, 0));
  s.v = ZMat(cols, ZVec(cols, 0));
  for (size_t i = 0; i < rows; ++i) s.u[i][i] = 1;
  for (size_t j = 0; j < cols; ++j) s.v[j][j] = 1;
  ZMat a = m0;

  size_t t = 0;
  bool exhausted = false;
  while (!exhausted && t < rows && t < cols) {
    for (;;) {
      // smallest nonzero entry of the trailing block as pivot; re-selected
      // after every modification so the pivot strictly shrinks
      size_t pi = rows, pj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == rows) {  // trailing block is zero
        exhausted = true;
        break;
      }
      if (pi != t) {
        std::swap(a[pi], a[t]);
        std::swap(s.u[pi], s.u[t]);
      }
      if (pj != t) {
        swap_cols(a, pj, t);
        swap_cols(s.v, pj, t);
      }
      // reduce the pivot column and row; leftover remainders become the
      // next, strictly smaller pivot
      bool dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = div_nearest(a[i][t], a[t][t]);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(s.u, i, t, -q);
        }
        if (a[i][t] != 0) dirty = true;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = div_nearest(a[t][j], a[t][t]);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(s.v, j, t, -q);
        }
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the whole trailing block
      bool fixed = false;
      for (size_t i = t + 1; i < rows && !fixed; ++i)
        for (size_t j = t + 1; j < cols && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(a, t, i, 1);
            add_row(s.u, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (!exhausted) ++t;
  }
  for (size_t i = 0; i < t; ++i)
    if (a[i][i] < 0) {
      a[i][i] = -a[i][i];
      for (size_t j = 0; j < rows; ++j) s.u[i][j] = -s.u[i][j];
    }
  size_t n = std::min(rows, cols);
  s.diagonal.resize(n);
  for (size_t i = 0; i < n; ++i) s.diagonal[i] = a[i][i];
  for (size_t i = 0; i + 1 < n; ++i)
    if (s.diagonal[i + 1] != 0 && (s.diagonal[i] == 0 || s.diagonal[i + 1] % s.diagonal[i] != 0))
      throw std::runtime_error("snf: divisibility chain violated");
  return s;
}

Int FinAbGroup::order() const {
  Int o = 1;
  for (const Int& e : invariant_factors) o *= e;
  return o;
}

std::string FinAbGroup::iso_label() const {
  if (invariant_factors.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < invariant_factors.size()) {
    size_t j = i;
    while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
    std::string base = "Z/" + invariant_factors[i].str();
    if (!out.empty()) out += " x ";
    out += (j - i > 1) ? "(" + base + ")^" + std::to_string(j - i) : base;
    i = j;
  }
  return out;
}

std::vector<Int> FinAbGroup::project(const ZVec& x) const {
  std::vector<Int> t(invariant_factors.size(), 0);
  for (size_t i = 0; i < t.size(); ++i) {
    Int s = 0;
    for (size_t j = 0; j < x.size(); ++j) s += projection[i][j] * x[j];
    s %= invariant_factors[i];
    if (s < 0) s += invariant_factors[i];
    t[i] = s;
  }
  return t;
}

FinAbGroup cokernel_group(const ZMat& m) {
  SmithForm s = snf(m);
  for (const Int& d : s.diagonal)
    if (d == 0) throw std::invalid_argument("cokernel_group: infinite quotient");
  FinAbGroup g;
  g.snf_diagonal = s.diagonal;
  for (size_t i = 0; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] > 1) {
      g.invariant_factors.push_back(s.diagonal[i]);
      g.projection.push_back(s.u[i]);
    }
  return g;
}

namespace {

// 1 - w in the weight basis, as an exact integer matrix
ZMat one_minus_w_weight(const RootDatum& rd, const IMat& w) {
  int n = rd.rank();
  QMat c = to_qmat(rd.cartan());
  QMat rho = qmat_mul(qmat_mul(c, to_qmat(w)), qmat_inverse(c));
  QMat q(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Rat(i == j ? 1 : 0) - rho[i][j];
  IMat z = qmat_to_imat_exact(q);
  return to_zmat(z);
}

// (1 - w) P expressed in root-basis coordinates: (1 - sigma) C^{-1}
ZMat one_minus_w_root(const RootDatum& rd, const IMat& w) {
  int n = rd.rank();
  QMat q(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Rat((i == j ? 1 : 0) - w[i][j]);
  QMat res = qmat_mul(q, qmat_inverse(to_qmat(rd.cartan())));
  return to_zmat(qmat_to_imat_exact(res));
}

}  // namespace

FinAbGroup a_m(const RootDatum& rd, const IMat& w) {
  if (!is_elliptic(w)) throw std::invalid_argument("a_m: element is not elliptic");
  return cokernel_group(one_minus_w_weight(rd, w));
}

FinAbGroup a_m_circ(const RootDatum& rd, const IMat& w) {
  if (!is_elliptic(w)) throw std::invalid_argument("a_m_circ: element is not elliptic");
  return cokernel_group(one_minus_w_root(rd, w));
}

LatticeAction quotient_action(const RootDatum& rd, const IMat& w, const std::vector<IMat>& zgens) {
  SmithForm s = snf(one_minus_w_root(rd, w));
  std::vector<size_t> keep;
  for (size_t i = 0; i < s.diagonal.size(); ++i) {
    if (s.diagonal[i] == 0) throw std::invalid_argument("quotient_action: infinite quotient");
    if (s.diagonal[i] > 1) keep.push_back(i);
  }
  QMat uinv = qmat_inverse(to_qmat(s.u));
  LatticeAction act;
  for (size_t i : keep) act.mod.push_back(s.diagonal[i]);
  for (const IMat& g : zgens) {
    // action on tuples: U g U^{-1}; generators are already in the root basis
    QMat b = qmat_mul(qmat_mul(to_qmat(s.u), to_qmat(g)), uinv);
    ZMat bz(b.size(), ZVec(b.size()));
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) {
        if (b[i][j].denominator() != 1)
          throw std::runtime_error("quotient_action: non-integral conjugate");
        bz[i][j] = b[i][j].numerator();
      }
    // well-defined on the quotient: e_i | b[i][j] e_j
    for (size_t i = 0; i < s.diagonal.size(); ++i)
      for (size_t j = 0; j < s.diagonal.size(); ++j)
        if ((bz[i][j] * s.diagonal[j]) % s.diagonal[i] != 0)
          throw std::runtime_error("quotient_action: generator does not descend");
    ZMat red(keep.size(), ZVec(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = 0; j < keep.size(); ++j) {
        Int v = bz[keep[i]][keep[j]] % act.mod[i];
        if (v < 0) v += act.mod[i];
        red[i][j] = v;
      }
    act.gens.push_back(red);
  }
  return act;
}

std::vector<Int> orbit_decomposition(const LatticeAction& act) {
  size_t r = act.mod.size();
  std::vector<long long> mod(r), stride(r);
  long long total = 1;
  for (size_t i = 0; i < r; ++i) {
    mod[i] = act.mod[i].convert_to<long long>();
    stride[i] = total;
    total *= mod[i];
  }
  if (total > 2000000) throw std::runtime_error("orbit_decomposition: group too large");

  auto decode = [&](long long idx, std::vector<long long>& x) {
    for (size_t i = 0; i < r; ++i) x[i] = (idx / stride[i]) % mod[i];
  };
  std::vector<std::vector<long long>> gens;
  for (const ZMat& g : act.gens) {
    std::vector<long long> flat(r * r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) flat[i * r + j] = g[i][j].convert_to<long long>();
    gens.push_back(std::move(flat));
  }

  std::vector<char> seen(total, 0);
  std::vector<Int> sizes;
  std::vector<long long> x(r), y(r), stack;
  for (long long start = 0; start < total; ++start) {
    if (seen[start]) continue;
    long long count = 0;
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      long long cur = stack.back();
      stack.pop_back();
      ++count;
      decode(cur, x);
      for (const auto& g : gens) {
        long long idx = 0;
        for (size_t i = 0; i < r; ++i) {
          long long s = 0;
          for (size_t j = 0; j < r; ++j) s += g[i * r + j] * x[j];
          y[i] = s % mod[i];
          idx += y[i] * stride[i];
        }
        if (!seen[idx]) {
          seen[idx] = 1;
          stack.push_back(idx);
        }
      }
    }
    sizes.push_back(Int(count));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Int> orbit_decomposition(const RootDatum& rd, const IMat& w, const Centralizer& z) {
  if (!z.verified) throw std::invalid_argument("orbit_decomposition: unverified centralizer");
  return orbit_decomposition(quotient_action(rd, w, z.gens));
}

}  // namespace wk
