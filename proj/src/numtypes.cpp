#include "weylkit/numtypes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wk {

IMat imat_identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      i64 aij = a[i][j];
      if (!aij) continue;
      for (size_t l = 0; l < p; ++l) c[i][l] += aij * b[j][l];
    }
  return c;
}

IVec imat_apply(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

IMat imat_transpose(const IMat& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  IMat t(m, IVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

bool imat_is_identity(const IMat& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

IMat imat_pow(const IMat& a, i64 e) {
  IMat r = imat_identity((int)a.size());
  IMat base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = imat_mul(r, base);
    if (e > 1) base = imat_mul(base, base);
  }
  return r;
}

ZMat to_zmat(const IMat& a) {
  ZMat z(a.size());
  for (size_t i = 0; i < a.size(); ++i) z[i].assign(a[i].begin(), a[i].end());
  return z;
}

QMat to_qmat(const IMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    q[i].reserve(a[i].size());
    for (i64 x : a[i]) q[i].emplace_back(Int(x));
  }
  return q;
}

QMat to_qmat(const ZMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    q[i].reserve(a[i].size());
    for (const Int& x : a[i]) q[i].emplace_back(x);
  }
  return q;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  QMat c(n, QVec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == Rat(0)) continue;
      for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

QVec qmat_apply(const QMat& a, const QVec& v) {
  QVec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

QMat qmat_inverse(const QMat& a) {
  size_t n = a.size();
  QMat m = a;
  QMat inv(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw std::runtime_error("qmat_inverse: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rat(0)) continue;
      Rat f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

QMat qmat_kernel(QMat a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t piv = lead;
    while (piv < rows && a[piv][col] == Rat(0)) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[lead]);
    Rat d = a[lead][col];
    for (size_t j = 0; j < cols; ++j) a[lead][j] /= d;
    for (size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col];
      for (size_t j = 0; j < cols; ++j) a[r][j] -= f * a[lead][j];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  QMat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    QVec v(cols, Rat(0));
    v[f] = Rat(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Int zmat_det(ZMat a) {
  // Bareiss fraction-free elimination.
  size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IMat qmat_to_imat_exact(const QMat& a) {
  IMat r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(a[i].size());
    for (const Rat& x : a[i]) {
      if (x.denominator() != 1)
        throw std::runtime_error("qmat_to_imat_exact: non-integral entry");
      r[i].push_back(x.numerator().convert_to<i64>());
    }
  }
  return r;
}

// ---- polynomials ----------------------------------------------------------

static void poly_trim(ZVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZVec poly_mul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

bool poly_div_exact(const ZVec& num, const ZVec& den, ZVec& quot) {
  quot.clear();
  ZVec r = num;
  poly_trim(r);
  ZVec d = den;
  poly_trim(d);
  if (d.empty()) return false;
  if (r.empty()) return true;  // 0 / den = 0
  if (r.size() < d.size()) return false;
  ZVec q(r.size() - d.size() + 1, Int(0));
  for (size_t k = q.size(); k-- > 0;) {
    Int lead = r[k + d.size() - 1];
    if (lead == 0) continue;
    if (lead % d.back() != 0) return false;
    Int c = lead / d.back();
    q[k] = c;
    for (size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  for (const Int& x : r)
    if (x != 0) return false;
  quot = std::move(q);
  return true;
}

static ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  size_t n = a.size();
  ZMat c(n, ZVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < n; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

ZVec charpoly(const ZMat& a) {
  // Faddeev-LeVerrier; the trace divisions are exact over Z.
  size_t n = a.size();
  ZVec c(n + 1, Int(0));
  c[n] = 1;
  ZMat am;  // A * M_k
  for (size_t k = 1; k <= n; ++k) {
    ZMat mk;  // M_k = A*M_{k-1} + c_{n-k+1} I  (M_1 = I)
    if (k == 1) {
      mk = ZMat(n, ZVec(n, Int(0)));
      for (size_t i = 0; i < n; ++i) mk[i][i] = 1;
    } else {
      mk = am;
      for (size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    }
    am = zmat_mul(a, mk);
    Int tr = 0;
    for (size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Int(k);
  }
  return c;  // coefficients of x^0..x^n, monic
}

const ZVec& cyclotomic(int m) {
  static std::map<int, ZVec> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by all proper cyclotomic factors.
  ZVec p(m + 1, Int(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    ZVec q;
    bool ok = poly_div_exact(p, cyclotomic(d), q);
    if (!ok) throw std::runtime_error("cyclotomic: non-exact division");
    p = std::move(q);
  }
  return cache.emplace(m, std::move(p)).first->second;
}

int cyclotomic_multiplicity(ZVec p, int m) {
  const ZVec& phi = cyclotomic(m);
  int mult = 0;
  ZVec q;
  while (poly_div_exact(p, phi, q) && !p.empty()) {
    ++mult;
    p = q;
    if (p.size() == 1) break;
  }
  return mult;
}

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
  return rat_frac(std::move(num), std::move(den));
}

std::string rat_str(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

}  // namespace wk
