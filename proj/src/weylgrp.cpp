#include "weylkit/weylgrp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace wk {

namespace {

// ---- compact 8x8 elements for the BFS-heavy paths -------------------------
// Entries of Weyl elements in the simple-root basis are bounded by the
// largest highest-root coefficient (6), so int8 storage is exact.

struct Mat8 {
  std::array<int8_t, 64> a{};
  bool operator==(const Mat8& o) const { return a == o.a; }
};

Mat8 mat8_from(const IMat& m) {
  Mat8 r;
  int n = (int)m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      assert(m[i][j] >= -128 && m[i][j] < 128);
      r.a[i * 8 + j] = (int8_t)m[i][j];
    }
  return r;
}

IMat mat8_to(const Mat8& m, int n) {
  IMat r(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = m.a[i * 8 + j];
  return r;
}

Mat8 mat8_mul(const Mat8& x, const Mat8& y, int n) {
  Mat8 r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += (int)x.a[i * 8 + k] * (int)y.a[k * 8 + j];
      assert(s >= -128 && s < 128);
      r.a[i * 8 + j] = (int8_t)s;
    }
  return r;
}

Mat8 mat8_identity(int n) {
  Mat8 r;
  for (int i = 0; i < n; ++i) r.a[i * 8 + i] = 1;
  return r;
}

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// shared per-call context: fast root lookup for key extraction
struct Ctx {
  const RootDatum& rd;
  int n;
  std::unordered_map<uint64_t, uint16_t> root_of;  // packed coords -> root index
  std::vector<Mat8> srefl;

  explicit Ctx(const RootDatum& r) : rd(r), n(r.rank()) {
    root_of.reserve(2 * r.num_pos());
    for (size_t i = 0; i < r.roots().size(); ++i)
      root_of.emplace(pack_coords(r.roots()[i].a), (uint16_t)i);
    for (int i = 1; i <= n; ++i) srefl.push_back(mat8_from(r.simple_reflection(i)));
  }

  uint64_t key(const Mat8& m) const {
    uint64_t k = 0;
    IVec col(n);
    for (int j = 0; j < 8; ++j) {
      uint64_t b = 0xFF;
      if (j < n) {
        for (int i = 0; i < n; ++i) col[i] = m.a[i * 8 + j];
        auto it = root_of.find(pack_coords(col));
        assert(it != root_of.end());
        b = it->second;
      }
      k |= b << (8 * j);
    }
    return k;
  }
};

// open-addressing u64 -> u32 map sized for a known upper bound
struct U64Map {
  std::vector<uint64_t> keys;
  std::vector<uint32_t> vals;
  uint64_t mask = 0;
  size_t count = 0;
  static constexpr uint64_t kEmpty = ~0ULL;

  explicit U64Map(size_t cap) {
    size_t sz = 64;
    while (sz < 2 * cap + 16) sz <<= 1;
    keys.assign(sz, kEmpty);
    vals.assign(sz, 0);
    mask = sz - 1;
  }
  // returns existing value, or inserts and returns v
  uint32_t find_or_insert(uint64_t k, uint32_t v, bool& inserted) {
    size_t i = splitmix(k) & mask;
    while (true) {
      if (keys[i] == kEmpty) {
        keys[i] = k;
        vals[i] = v;
        ++count;
        inserted = true;
        return v;
      }
      if (keys[i] == k) {
        inserted = false;
        return vals[i];
      }
      i = (i + 1) & mask;
    }
  }
  bool contains(uint64_t k) const {
    size_t i = splitmix(k) & mask;
    while (true) {
      if (keys[i] == kEmpty) return false;
      if (keys[i] == k) return true;
      i = (i + 1) & mask;
    }
  }
};

__int128 det128(const IMat& m) {
  int n = (int)m.size();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Cayley closure in compact form.  Returns element count, or 0 if the budget
// was exceeded.  Optionally collects the elements and/or their keys.
size_t closure_mat8(const Ctx& ctx, const std::vector<Mat8>& gens, size_t budget,
                    std::vector<Mat8>* elems, std::unordered_set<uint64_t>* keyset) {
  std::unordered_set<uint64_t> seen;
  seen.reserve(1024);
  std::vector<Mat8> frontier{mat8_identity(ctx.n)};
  seen.insert(ctx.key(frontier[0]));
  if (elems) *elems = frontier;
  size_t total = 1;
  while (!frontier.empty()) {
    std::vector<Mat8> next;
    for (const Mat8& x : frontier)
      for (const Mat8& g : gens) {
        Mat8 y = mat8_mul(x, g, ctx.n);
        if (seen.insert(ctx.key(y)).second) {
          ++total;
          if (total > budget) return 0;
          next.push_back(y);
          if (elems) elems->push_back(y);
        }
      }
    frontier = std::move(next);
  }
  if (keyset) *keyset = std::move(seen);
  return total;
}

}  // namespace

int elt_order(const IMat& m) {
  IMat p = m;
  int o = 1;
  while (!imat_is_identity(p)) {
    p = imat_mul(p, m);
    if (++o > 512) throw std::runtime_error("elt_order: runaway");
  }
  return o;
}

int elt_det(const IMat& m) {
  __int128 d = det128(m);
  assert(d == 1 || d == -1);
  return (int)d;
}

bool is_elliptic(const IMat& w) {
  IMat a = w;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) a[i][j] = -a[i][j];
    a[i][i] += 1;
  }
  return det128(a) != 0;
}

int eigenspace_dim(const IMat& w, int m) { return cyclotomic_multiplicity(charpoly(to_zmat(w)), m); }

bool certify_elliptic_regular(const RootDatum& rd, const IMat& w, int m) {
  if (m < 1) return false;
  if (!is_elliptic(w)) return false;
  if (elt_order(w) != m) return false;
  // Regularity: the primitive-m eigenspaces must contain a vector off every
  // reflection hyperplane.  They are Galois conjugates inside the rational
  // kernel K of the m-th cyclotomic polynomial evaluated at w, and the
  // hyperplane conditions are rational, so a root's pairing vanishes on one
  // eigenspace iff it vanishes on all of K.  A finite union of proper
  // subspaces never covers a complex space, hence: regular iff K != 0 and no
  // root pairing is identically zero on K.
  ZVec phi = cyclotomic(m);
  int n = rd.rank();
  ZMat zw = to_zmat(w);
  auto mul = [n](const ZMat& x, const ZMat& y) {
    ZMat r(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  ZMat pw(n, ZVec(n, 0));
  for (auto it = phi.rbegin(); it != phi.rend(); ++it) {
    if (it != phi.rbegin()) pw = mul(pw, zw);
    for (int i = 0; i < n; ++i) pw[i][i] += *it;
  }
  QMat pq(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pq[i][j] = Rat(pw[i][j]);
  QMat ker = qmat_kernel(pq);
  if (ker.empty()) return false;
  for (int a = 0; a < rd.num_pos(); ++a) {
    const IVec& cov = rd.roots()[a].cov;
    bool vanishes = true;
    for (const QVec& v : ker) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += v[j] * Rat(cov[j]);
      if (s != Rat(0)) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return false;
  }
  // cross-check against the degree theory: eigenspace multiplicity must be
  // the number of degrees m divides
  size_t phim = phi.size() - 1;
  assert(ker.size() % phim == 0);
  assert(ker.size() / phim == rd.i_m(m).size());
  return true;
}

uint64_t elt_key(const RootDatum& rd, const IMat& w) {
  Ctx ctx(rd);
  return ctx.key(mat8_from(w));
}

std::vector<int> elliptic_numbers(const RootDatum& rd) {
  // Regular m: m divides as many degrees as codegrees (d_i - 2), at least
  // one.  Elliptic on top of regular: m divides no exponent.
  const auto& deg = rd.degrees();
  std::vector<int> out;
  for (int m = 2; m <= rd.coxeter_number(); ++m) {
    int a = 0, b = 0, e = 0;
    for (int d : deg) {
      if (d % m == 0) ++a;
      if ((d - 2) % m == 0) ++b;
      if ((d - 1) % m == 0) ++e;
    }
    if (a >= 1 && a == b && e == 0) out.push_back(m);
  }
  return out;
}

std::vector<int> elliptic_numbers_exhaustive(const RootDatum& rd, size_t cap) {
  if (rd.weyl_order() > Int(cap))
    throw std::invalid_argument("elliptic_numbers_exhaustive: group too large");
  Ctx ctx(rd);
  std::set<int> found;
  std::unordered_set<uint64_t> seen;
  std::vector<Mat8> frontier{mat8_identity(ctx.n)};
  seen.insert(ctx.key(frontier[0]));
  size_t total = 1;
  while (!frontier.empty()) {
    std::vector<Mat8> next;
    for (const Mat8& x : frontier)
      for (const Mat8& g : ctx.srefl) {
        Mat8 y = mat8_mul(x, g, ctx.n);
        if (!seen.insert(ctx.key(y)).second) continue;
        ++total;
        next.push_back(y);
        IMat w = mat8_to(y, ctx.n);
        if (!is_elliptic(w)) continue;
        int o = elt_order(w);
        if (found.count(o)) continue;
        // cheap eigenspace-dimension gate before the kernel certificate
        if (eigenspace_dim(w, o) != (int)rd.i_m(o).size()) continue;
        if (certify_elliptic_regular(rd, w, o)) found.insert(o);
      }
    frontier = std::move(next);
  }
  assert(Int(total) == rd.weyl_order());
  return std::vector<int>(found.begin(), found.end());
}

std::vector<std::vector<int>> seed_words(const RootDatum& rd) {
  std::vector<std::vector<int>> out;
  std::vector<int> cox(rd.rank());
  std::iota(cox.begin(), cox.end(), 1);
  out.push_back(cox);
  if (rd.type() == 'F') out.push_back({1, 2, 3, 2, 3, 4});
  if (rd.type() == 'E' && rd.rank() == 6) out.push_back({1, 2, 3, 4, 2, 5, 4, 6});
  if (rd.type() == 'E' && rd.rank() == 7) out.push_back({1, 2, 3, 4, 2, 5, 4, 6, 7});
  if (rd.type() == 'E' && rd.rank() == 8) {
    out.push_back({1, 2, 3, 4, 2, 5, 4, 6, 7, 8});
    out.push_back({1, 2, 3, 4, 2, 5, 4, 6, 5, 4, 7, 8});
  }
  return out;
}

std::optional<IMat> elliptic_rep(const RootDatum& rd, int m, uint64_t seed) {
  auto en = elliptic_numbers(rd);
  if (std::find(en.begin(), en.end(), m) == en.end()) return std::nullopt;
  for (const auto& wd : seed_words(rd)) {
    IMat M = rd.word_matrix(wd);
    int o = elt_order(M);
    if (o % m) continue;
    IMat c = imat_pow(M, o / m);
    if (certify_elliptic_regular(rd, c, m)) return c;
  }
  // Seeded random fallback; certification gates every hit, so only the
  // search order depends on the seed.
  std::mt19937_64 rng(splitmix(seed) ^ splitmix(((uint64_t)rd.type() << 16) | ((uint64_t)rd.rank() << 8) | (uint64_t)m));
  int n = rd.rank();
  for (int trial = 0; trial < 300000; ++trial) {
    size_t len = n + rng() % (3 * n + 1);
    IMat M = imat_identity(n);
    for (size_t i = 0; i < len; ++i) M = imat_mul(M, rd.simple_reflection(1 + (int)(rng() % n)));
    int o = elt_order(M);
    if (o % m) continue;
    IMat c = imat_pow(M, o / m);
    if (eigenspace_dim(c, m) != (int)rd.i_m(m).size()) continue;
    if (certify_elliptic_regular(rd, c, m)) return c;
  }
  return std::nullopt;
}

std::optional<std::vector<IMat>> subgroup_closure(const RootDatum& rd, const std::vector<IMat>& gens,
                                                  size_t budget) {
  Ctx ctx(rd);
  std::vector<Mat8> g8;
  for (const auto& g : gens) g8.push_back(mat8_from(g));
  std::vector<Mat8> elems;
  size_t cnt = closure_mat8(ctx, g8, budget, &elems, nullptr);
  if (cnt == 0) return std::nullopt;
  std::vector<IMat> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(mat8_to(e, ctx.n));
  return out;
}

namespace {

// transversal words: t_x with x = t_x w t_x^{-1}; children satisfy t_y = s t_x
struct ClassBfsResult {
  size_t class_size = 0;        // 0 if budget exceeded
  size_t closure_count = 0;     // order of <harvested generators>
  std::vector<IMat> harvested;  // includes w (and -1 when available)
};

ClassBfsResult class_bfs(const Ctx& ctx, const IMat& w, size_t budget, size_t harvest_goal,
                         std::vector<IMat> seed_gens) {
  int n = ctx.n;
  ClassBfsResult res;
  res.harvested = std::move(seed_gens);

  std::unordered_set<uint64_t> closure_keys;
  size_t closure_count = 0;
  auto reclose = [&]() {
    std::vector<Mat8> g8;
    for (const auto& g : res.harvested) g8.push_back(mat8_from(g));
    closure_count = closure_mat8(ctx, g8, 4 * harvest_goal + 64, nullptr, &closure_keys);
  };
  reclose();

  U64Map index(budget);
  std::vector<uint32_t> parent(1, 0);
  std::vector<uint8_t> letter(1, 0);
  Mat8 w8 = mat8_from(w);
  bool ins;
  index.find_or_insert(ctx.key(w8), 0, ins);
  std::vector<std::pair<Mat8, uint32_t>> frontier{{w8, 0}};
  size_t total = 1;

  auto word_to = [&](uint32_t id) {  // t_x as a matrix
    IMat t = imat_identity(n);
    for (uint32_t cur = id; cur != 0; cur = parent[cur])
      t = imat_mul(t, ctx.rd.simple_reflection(letter[cur]));
    return t;
  };
  auto word_to_inv = [&](uint32_t id) {  // t_x^{-1}: reflections reversed
    std::vector<int> ls;
    for (uint32_t cur = id; cur != 0; cur = parent[cur]) ls.push_back(letter[cur]);
    IMat t = imat_identity(n);
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
      t = imat_mul(t, ctx.rd.simple_reflection(*it));
    return t;
  };

  while (!frontier.empty()) {
    std::vector<std::pair<Mat8, uint32_t>> next;
    for (const auto& [x, xid] : frontier) {
      for (int i = 1; i <= n; ++i) {
        Mat8 y = mat8_mul(mat8_mul(ctx.srefl[i - 1], x, n), ctx.srefl[i - 1], n);
        uint64_t k = ctx.key(y);
        bool inserted;
        uint32_t yid = index.find_or_insert(k, (uint32_t)total, inserted);
        if (inserted) {
          parent.push_back(xid);
          letter.push_back((uint8_t)i);
          next.emplace_back(y, (uint32_t)total);
          ++total;
          if (total > budget) return res;  // class_size stays 0
        } else if (closure_count < harvest_goal) {
          // Schreier generator z = t_y^{-1} s_i t_x centralizes w
          IMat z = imat_mul(imat_mul(word_to_inv(yid), ctx.rd.simple_reflection(i)), word_to(xid));
          if (!closure_keys.count(ctx.key(mat8_from(z)))) {
            res.harvested.push_back(z);
            reclose();
          }
        }
      }
    }
    frontier = std::move(next);
  }
  res.class_size = total;
  res.closure_count = closure_count;
  return res;
}

}  // namespace

Centralizer centralizer(const RootDatum& rd, const IMat& w, size_t class_budget) {
  int m = elt_order(w);
  if (!certify_elliptic_regular(rd, w, m))
    throw std::invalid_argument("centralizer: element is not regular elliptic");
  Int target = 1;
  for (int i : rd.i_m(m)) target *= rd.degrees()[i - 1];

  Centralizer res;
  // central element: commutes with every generator, so Z = W
  bool central = true;
  for (int i = 1; i <= rd.rank() && central; ++i) {
    const IMat& s = rd.simple_reflection(i);
    if (imat_mul(s, w) != imat_mul(w, s)) central = false;
  }
  if (central) {
    res.order = rd.weyl_order();
    res.method = "central";
    res.verified = true;
    for (int i = 1; i <= rd.rank(); ++i) res.gens.push_back(rd.simple_reflection(i));
    return res;
  }

  std::vector<IMat> seed{w};
  bool minus_one = true;  // -1 in W iff every degree is even
  for (int d : rd.degrees())
    if (d % 2) minus_one = false;
  if (minus_one) {
    IMat neg = imat_identity(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) neg[i][i] = -1;
    seed.push_back(neg);
  }

  auto cl = subgroup_closure(rd, seed, 4096);
  if (cl && Int(cl->size()) == target) {
    // lower bound meets the degree-product oracle; the oracle is also an
    // upper bound for regular elements, so stop here
    res.order = target;
    res.method = "cyclic";
    res.verified = true;
    res.gens = seed;
    res.elements = std::move(*cl);
    return res;
  }

  Ctx ctx(rd);
  size_t goal = target.convert_to<size_t>();
  ClassBfsResult bfs = class_bfs(ctx, w, class_budget, goal, seed);
  if (bfs.class_size == 0) {
    res.method = "budget-exceeded";
    return res;
  }
  Int order = rd.weyl_order() / Int(bfs.class_size);
  if (order * Int(bfs.class_size) != rd.weyl_order())
    throw std::runtime_error("centralizer: class size does not divide |W|");
  if (bfs.closure_count != order.convert_to<size_t>()) {
    // harvest goal was wrong (oracle mismatch): rerun with the true order
    bfs = class_bfs(ctx, w, class_budget, order.convert_to<size_t>(), seed);
  }
  res.order = order;
  res.class_size = Int(bfs.class_size);
  res.gens = bfs.harvested;
  res.verified = (Int(bfs.closure_count) == order);
  res.method = "class-bfs";
  if (order <= 65536) {
    auto elems = subgroup_closure(rd, res.gens, order.convert_to<size_t>() + 1);
    if (elems) res.elements = std::move(*elems);
  }
  return res;
}

namespace {

std::pair<char, int> classify_component(const RootDatum& rd, const std::vector<int>& comp,
                                        const IMat& cart) {
  int k = (int)comp.size();
  if (k == 1) return {'A', 1};
  std::vector<int> deg(k, 0);
  int bi = -1, bj = -1, bond = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || cart[i][j] == 0) continue;
      if (j > i) {
        int b = (int)(cart[i][j] * cart[j][i]);
        if (b > bond) bond = b, bi = i, bj = j;
      }
      ++deg[i];
    }
  if (bond == 3) {
    if (k != 2) throw std::runtime_error("component: bad triple bond");
    return {'G', 2};
  }
  if (bond == 2) {
    if (k == 2) return {'B', 2};
    if (k == 4 && deg[bi] == 2 && deg[bj] == 2) return {'F', 4};
    i64 mn = rd.roots()[comp[0]].norm, mx = mn;
    for (int c : comp) {
      mn = std::min(mn, rd.roots()[c].norm);
      mx = std::max(mx, rd.roots()[c].norm);
    }
    int nshort = 0;
    for (int c : comp)
      if (rd.roots()[c].norm == mn) ++nshort;
    return nshort == 1 ? std::make_pair('B', k) : std::make_pair('C', k);
  }
  // simply laced
  int branch = -1;
  for (int i = 0; i < k; ++i) {
    if (deg[i] > 3) throw std::runtime_error("component: vertex degree > 3");
    if (deg[i] == 3) {
      if (branch != -1) throw std::runtime_error("component: two branch vertices");
      branch = i;
    }
  }
  if (branch == -1) return {'A', k};
  // arm lengths from the branch vertex
  std::vector<int> arms;
  for (int j = 0; j < k; ++j) {
    if (j == branch || cart[branch][j] == 0) continue;
    int len = 1, prev = branch, cur = j;
    while (true) {
      int nxt = -1;
      for (int t = 0; t < k; ++t)
        if (t != prev && t != cur && cart[cur][t] != 0) nxt = t;
      if (nxt == -1) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::runtime_error("component: bad branch");
  if (arms[0] == 1 && arms[1] == 1) return {'D', arms[2] + 3};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {'E', arms[2] + 4};
  throw std::runtime_error("component: unrecognized diagram");
}

}  // namespace

ReflSubgroup reflection_subgroup(const RootDatum& rd, const std::vector<int>& root_idx,
                                 size_t budget) {
  ReflSubgroup out;
  if (root_idx.empty()) {
    out.cartan_type = "1";
    out.elements = {imat_identity(rd.rank())};
    out.dets = {1};
    out.enumerated = true;
    return out;
  }
  // close into a subsystem
  std::set<int> sys(root_idx.begin(), root_idx.end());
  for (int i : root_idx) sys.insert(rd.negate_index(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(sys.begin(), sys.end());
    for (int a : cur) {
      IMat refl = rd.reflection(a);
      for (int b : cur) {
        int idx = rd.root_index(imat_apply(refl, rd.roots()[b].a));
        assert(idx >= 0);
        if (sys.insert(idx).second) grew = true;
      }
    }
  }
  // simple system: positives not expressible as a sum of two positives
  std::vector<int> pos;
  for (int i : sys)
    if (i < rd.num_pos()) pos.push_back(i);
  std::set<int> non_simple;
  for (int p : pos)
    for (int q : pos) {
      if (p >= q) continue;
      IVec sum = rd.roots()[p].a;
      for (int t = 0; t < rd.rank(); ++t) sum[t] += rd.roots()[q].a[t];
      int idx = rd.root_index(sum);
      if (idx >= 0 && sys.count(idx)) non_simple.insert(idx);
    }
  for (int p : pos)
    if (!non_simple.count(p)) out.simple_idx.push_back(p);

  int k = (int)out.simple_idx.size();
  IMat cart(k, IVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      cart[i][j] = ivec_dot(rd.roots()[out.simple_idx[i]].cov, rd.roots()[out.simple_idx[j]].a);

  // split into components and recognize each
  std::vector<int> comp_id(k, -1);
  std::vector<std::pair<char, int>> comps;
  for (int i = 0; i < k; ++i) {
    if (comp_id[i] != -1) continue;
    std::vector<int> nodes{i};
    comp_id[i] = i;
    for (size_t q = 0; q < nodes.size(); ++q)
      for (int j = 0; j < k; ++j)
        if (comp_id[j] == -1 && cart[nodes[q]][j] != 0) {
          comp_id[j] = i;
          nodes.push_back(j);
        }
    // extract the component's Cartan matrix and root list
    IMat sub((int)nodes.size(), IVec((int)nodes.size()));
    std::vector<int> roots_of;
    for (size_t a = 0; a < nodes.size(); ++a) {
      roots_of.push_back(out.simple_idx[nodes[a]]);
      for (size_t b = 0; b < nodes.size(); ++b) sub[a][b] = cart[nodes[a]][nodes[b]];
    }
    comps.push_back(classify_component(rd, roots_of, sub));
  }
  std::sort(comps.begin(), comps.end(), [](auto& x, auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  out.order = 1;
  std::string ty;
  for (auto& [t, r] : comps) {
    out.order *= RootDatum(t, r).weyl_order();
    if (!ty.empty()) ty += "+";
    ty += t;
    ty += std::to_string(r);
  }
  out.cartan_type = ty;

  // enumerate if feasible
  if (out.order <= Int((unsigned long long)budget)) {
    Ctx ctx(rd);
    std::vector<Mat8> gens;
    for (int i : out.simple_idx) gens.push_back(mat8_from(rd.reflection(i)));
    std::vector<Mat8> elems;
    size_t cnt = closure_mat8(ctx, gens, budget, &elems, nullptr);
    if (cnt != 0) {
      if (Int(cnt) != out.order)
        throw std::runtime_error("reflection_subgroup: order mismatch " + std::to_string(cnt) +
                                 " vs type " + ty);
      out.elements.reserve(cnt);
      out.dets.reserve(cnt);
      for (const auto& e : elems) {
        IMat m = mat8_to(e, rd.rank());
        out.elements.push_back(m);
        out.dets.push_back(elt_det(m));
      }
      out.enumerated = true;
    }
  }
  return out;
}

}  // namespace wk
