#include "weylkit/localize.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "weylkit/torsion.hpp"

namespace wk {

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
  uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  return x;
}

// integer point off every root hyperplane; all torus weights below evaluate
// to nonzero numbers at every Weyl image of it
IVec generic_point(const RootDatum& rd, uint64_t seed) {
  std::mt19937_64 rng(mix(seed, ((uint64_t)rd.type() << 8) | (uint64_t)rd.rank()));
  std::uniform_int_distribution<i64> pick(-999, 999);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    IVec xi(rd.rank());
    for (auto& v : xi) v = pick(rng);
    bool ok = true;
    for (int i = 0; i < rd.num_pos() && ok; ++i)
      if (ivec_dot(rd.roots()[i].a, xi) == 0) ok = false;
    if (ok) return xi;
  }
  throw std::runtime_error("no generic point found");
}

struct Ctx {
  const RootDatum* rd = nullptr;
  SlopeChamber ch;
  IVec xi;
  std::vector<IVec> pts;  // per group element: sigma(g)^T xi
  Int eu_xi = 1;          // prod over dplus forms at xi
};

Ctx make_ctx(const RootDatum& rd, const Slope& s, uint64_t seed) {
  Ctx c;
  c.rd = &rd;
  c.ch = slope_chamber(rd, s);
  if (!c.ch.wc.enumerated)
    throw std::runtime_error("slope subgroup too large to enumerate");
  c.xi = generic_point(rd, seed);
  c.pts.reserve(c.ch.wc.elements.size());
  for (const auto& g : c.ch.wc.elements) {
    IMat gt = imat_transpose(g);
    c.pts.push_back(imat_apply(gt, c.xi));
  }
  for (int idx : c.ch.dplus) c.eu_xi *= Int(ivec_dot(rd.roots()[idx].a, c.xi));
  return c;
}

std::vector<int> finite_parts(const std::vector<AffineRoot>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& ar : v) out.push_back(ar.root);
  return out;
}

Int points_from(const Ctx& c, const std::vector<int>& dw) {
  if ((int)dw.size() != c.ch.n_c)
    throw std::invalid_argument("point count needs exactly n_c negative members");
  Int num = 0;
  for (size_t e = 0; e < c.pts.size(); ++e) {
    Int term = c.ch.wc.dets[e];
    for (int idx : dw) term *= Int(ivec_dot(c.rd->roots()[idx].a, c.pts[e]));
    num += term;
  }
  Int den = (c.ch.n_c % 2 ? -c.eu_xi : c.eu_xi);
  Int q = num / den;
  if (q * den != num) throw std::runtime_error("fixed-point sum not divisible by the euler form");
  return q;
}

// coefficient of s^0 in sum over fixed points of
//   s^(d - n_c) * (prod A / prod B) * prod(1 + sB) / prod(1 + sA);
// the strictly negative powers of the sum must cancel
Int chi_from(const Ctx& c, const std::vector<int>& dw) {
  int d = (int)dw.size(), T = c.ch.n_c - d;
  if (T < 0) throw std::invalid_argument("more negative members than the rank of the slope system");
  std::vector<Rat> acc(T + 1, Rat(0));
  for (size_t e = 0; e < c.pts.size(); ++e) {
    std::vector<Int> A, B;
    for (int idx : dw) A.push_back(Int(ivec_dot(c.rd->roots()[idx].a, c.pts[e])));
    for (int idx : c.ch.dplus) B.push_back(-Int(ivec_dot(c.rd->roots()[idx].a, c.pts[e])));
    auto expand = [&](const std::vector<Int>& roots) {
      std::vector<Int> p(T + 1, 0);
      p[0] = 1;
      for (const auto& r : roots)
        for (int t = T; t >= 1; --t) p[t] += r * p[t - 1];
      return p;
    };
    std::vector<Int> P = expand(A), Q = expand(B);
    // R = Q / P as a power series, to order T
    std::vector<Rat> R(T + 1);
    for (int t = 0; t <= T; ++t) {
      Rat v(Q[t]);
      for (int j = 1; j <= t; ++j) v -= Rat(P[j]) * R[t - j];
      R[t] = v;  // P[0] == 1
    }
    Rat K(1);
    for (const auto& a : A) K *= Rat(a);
    for (const auto& b : B) K /= Rat(b);
    for (int t = 0; t <= T; ++t) acc[t] += K * R[t];
  }
  for (int t = 0; t < T; ++t)
    if (acc[t] != Rat(0)) throw std::runtime_error("negative-power terms failed to cancel");
  if (acc[T].denominator() != 1) throw std::runtime_error("euler number came out non-integral");
  return acc[T].numerator();
}

}  // namespace

SlopeChamber slope_chamber(const RootDatum& rd, const Slope& s, size_t budget) {
  SlopeChamber ch;
  ch.s = s;
  ch.dplus = finite_parts(delta_c_plus(rd, s));
  ch.n_c = (int)ch.dplus.size();
  ch.wc = reflection_subgroup(rd, ch.dplus, budget);
  return ch;
}

Identity334 verify_334(const RootDatum& rd, const Slope& s, uint64_t seed) {
  Identity334 rep;
  SlopeChamber ch = slope_chamber(rd, s);
  if (!ch.wc.enumerated) {
    rep.detail = "slope subgroup of order " + ch.wc.order.str() + " exceeds the budget";
    return rep;
  }
  auto w = elliptic_rep(rd, s.m);
  if (!w) throw std::invalid_argument("no regular spectral class of order " + std::to_string(s.m));
  Int a_circ = a_m_circ(rd, *w).order();
  auto dw1 = finite_parts(frak_d_cw(rd, s, fundamental_alcove(rd)));

  bool all = true;
  for (int sample = 0; sample < 4; ++sample) {
    IVec xi = generic_point(rd, mix(seed, sample));
    Int lhs = a_circ;
    if (ch.n_c % 2) lhs = -lhs;
    for (int idx : ch.dplus) lhs *= Int(ivec_dot(rd.roots()[idx].a, xi));
    Int rhs = 0;
    for (size_t e = 0; e < ch.wc.elements.size(); ++e) {
      IVec y = imat_apply(imat_transpose(ch.wc.elements[e]), xi);
      Int term = ch.wc.dets[e];
      for (int idx : dw1) term *= Int(ivec_dot(rd.roots()[idx].a, y));
      rhs += term;
    }
    if (lhs != rhs) all = false;
  }
  rep.verified = true;
  rep.holds = all;
  std::ostringstream os;
  os << "slope subgroup " << ch.wc.cartan_type << " of order " << ch.wc.order << ", |A_m_circ| = "
     << a_circ << ", " << (all ? "agreed" : "DISAGREED") << " at 4 sample points";
  rep.detail = os.str();
  return rep;
}

Int point_count(const RootDatum& rd, const Slope& s, const Alcove& a, uint64_t seed) {
  Ctx c = make_ctx(rd, s, seed);
  return points_from(c, finite_parts(frak_d_cw(rd, s, a)));
}

Int chi_fiber(const RootDatum& rd, const Slope& s, const Alcove& a, uint64_t seed) {
  Ctx c = make_ctx(rd, s, seed);
  return chi_from(c, finite_parts(frak_d_cw(rd, s, a)));
}

ChiTotal total_chi(const RootDatum& rd, const Slope& s, int radius, uint64_t seed) {
  Ctx c = make_ctx(rd, s, seed);
  auto dc = frak_d_c(rd, s);
  auto dplus_affine = delta_c_plus(rd, s);
  ChiTotal out;
  out.frontier_clear = true;
  for (const auto& a : enumerate_alcoves(rd, radius)) {
    QVec x = alcove_center(rd, a);
    bool inside = true;
    for (const auto& ar : dplus_affine)
      if (eval_affine(rd, ar, x) <= Rat(0)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    ++out.wc_alcoves;
    std::vector<int> dw;
    for (const auto& ar : dc)
      if (eval_affine(rd, ar, x) < Rat(0)) dw.push_back(ar.root);
    Int contribution = 0;
    if ((int)dw.size() <= c.ch.n_c) contribution = chi_from(c, dw);
    out.total += contribution;
    if ((int)a.word.size() == radius && contribution != 0) out.frontier_clear = false;
  }
  return out;
}

}  // namespace wk
