#pragma once

// Exact linear algebra and polynomial helpers shared by every module.
//
// Two integer layers: machine i64 for the small matrices that dominate the
// hot paths (Weyl group elements in the simple-root basis have entries
// bounded by the largest highest-root coefficient, 6), and cpp_int/rational
// where growth is unbounded (characteristic polynomials, determinants,
// Smith reduction, localization sums).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wk {

using i64 = long long;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;  // row-major, rectangular
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// ---- machine-integer matrices ------------------------------------------

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& v);
IMat imat_transpose(const IMat& a);
bool imat_is_identity(const IMat& a);
IMat imat_pow(const IMat& a, i64 e);

inline i64 ivec_dot(const IVec& a, const IVec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---- arbitrary-precision matrices ---------------------------------------

ZMat to_zmat(const IMat& a);
QMat to_qmat(const IMat& a);
QMat to_qmat(const ZMat& a);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& v);
// Gauss-Jordan inverse; throws std::runtime_error on a singular input.
QMat qmat_inverse(const QMat& a);
// basis of the (right) null space, one vector per row; empty if injective
QMat qmat_kernel(QMat a);
Int zmat_det(ZMat a);  // fraction-free (Bareiss)

// Round-trips a rational matrix known to be integral; throws if it is not.
IMat qmat_to_imat_exact(const QMat& a);

// ---- polynomials over Int ------------------------------------------------
// Coefficient vectors, c[i] = coefficient of x^i, no trailing zeros.

ZVec poly_mul(const ZVec& a, const ZVec& b);
// Exact division: returns false (and leaves quot empty) unless den divides num.
bool poly_div_exact(const ZVec& num, const ZVec& den, ZVec& quot);
// Characteristic polynomial, monic of degree n (Faddeev-LeVerrier).
ZVec charpoly(const ZMat& a);
// m-th cyclotomic polynomial (cached).
const ZVec& cyclotomic(int m);
// Multiplicity of cyclotomic(m) in p.
int cyclotomic_multiplicity(ZVec p, int m);

// boost::rational<cpp_int> rejects negative denominators; normalize first.
inline Rat rat_frac(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

// ---- misc -----------------------------------------------------------------

Int gcd_int(Int a, Int b);
i64 gcd_i64(i64 a, i64 b);

// Parses "p/q" or "p" into an exact rational.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace wk
