#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "weylkit/torsion.hpp"

using namespace wk;

namespace {

ZMat zmat_of(std::vector<std::vector<long long>> rows) {
  ZMat m;
  for (auto& r : rows) {
    ZVec v;
    for (long long x : r) v.push_back(Int(x));
    m.push_back(v);
  }
  return m;
}

ZMat zmul(const ZMat& a, const ZMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  ZMat r(n, ZVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

// brute-force cokernel of a nonsingular integer matrix: BFS over the
// subgroup of (Z/D)^n generated by the adjugate columns, D = |det|
struct CosetOracle {
  long long order;
  std::map<long long, long long> killed;  // k -> #{x : kx = 0}
};

CosetOracle coset_oracle(const ZMat& m) {
  size_t n = m.size();
  Int det = zmat_det(m);
  REQUIRE(det != 0);
  long long d = abs(det).convert_to<long long>();
  QMat inv = qmat_inverse(to_qmat(m));
  std::vector<std::vector<long long>> gens;
  for (size_t j = 0; j < n; ++j) {
    std::vector<long long> g(n);
    for (size_t i = 0; i < n; ++i) {
      Rat adj = inv[i][j] * Rat(Int(d));  // adjugate (up to sign), integral
      REQUIRE(adj.denominator() == 1);
      long long v = adj.numerator().convert_to<long long>() % d;
      g[i] = v < 0 ? v + d : v;
    }
    gens.push_back(g);
  }
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> stack{std::vector<long long>(n, 0)};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      auto y = x;
      for (size_t i = 0; i < n; ++i) y[i] = (y[i] + g[i]) % d;
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  CosetOracle out;
  out.order = (long long)seen.size();
  for (long long k = 1; k <= d; ++k) {
    long long c = 0;
    for (const auto& x : seen) {
      bool dead = true;
      for (size_t i = 0; i < n; ++i)
        if ((k * x[i]) % d != 0) dead = false;
      if (dead) ++c;
    }
    out.killed[k] = c;
  }
  return out;
}

IMat random_weyl(const RootDatum& rd, std::mt19937_64& rng, int len) {
  IMat g = imat_identity(rd.rank());
  for (int i = 0; i < len; ++i)
    g = imat_mul(g, rd.simple_reflection(1 + (int)(rng() % rd.rank())));
  return g;
}

}  // namespace

TEST_CASE("snf: diagonal examples and UAV identity") {
  ZMat two = ZMat(8, ZVec(8, 0));
  for (int i = 0; i < 8; ++i) two[i][i] = 2;
  auto s = snf(two);
  for (const Int& d : s.diagonal) CHECK(d == 2);

  auto s2 = snf(zmat_of({{2, 1}, {0, 3}}));
  CHECK(s2.diagonal == std::vector<Int>{1, 6});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 2 + rng() % 4;
    ZMat a(n, ZVec(n));
    for (auto& row : a)
      for (auto& x : row) x = (long long)(rng() % 11) - 5;
    auto f = snf(a);
    CHECK(abs(zmat_det(f.u)) == 1);
    CHECK(abs(zmat_det(f.v)) == 1);
    ZMat uav = zmul(zmul(f.u, a), f.v);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) CHECK(uav[i][j] == (i == j ? f.diagonal[i] : Int(0)));
    for (size_t i = 0; i + 1 < n; ++i)
      if (f.diagonal[i + 1] != 0) CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
  }
}

TEST_CASE("snf is unchanged by unimodular row and column mixing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    ZMat a(3, ZVec(3));
    for (auto& row : a)
      for (auto& x : row) x = (long long)(rng() % 9) - 4;
    // random products of elementary matrices
    ZMat l = zmat_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    ZMat r = l;
    for (int k = 0; k < 6; ++k) {
      size_t i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      long long f = (long long)(rng() % 5) - 2;
      for (size_t t = 0; t < 3; ++t) l[i][t] += f * l[j][t];
      for (size_t t = 0; t < 3; ++t) r[t][i] += f * r[t][j];
    }
    CHECK(snf(a).diagonal == snf(zmul(zmul(l, a), r)).diagonal);
  }
}

TEST_CASE("cokernel groups match brute-force coset enumeration") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 25) {
    ZMat a(3, ZVec(3));
    for (auto& row : a)
      for (auto& x : row) x = (long long)(rng() % 7) - 3;
    Int det = zmat_det(a);
    if (det == 0 || abs(det) > 60) continue;
    ++done;
    FinAbGroup g = cokernel_group(a);
    CosetOracle oc = coset_oracle(a);
    CHECK(g.order() == Int(oc.order));
    CHECK(g.order() == abs(det));
    // the kill counts determine the isomorphism type
    for (auto& [k, cnt] : oc.killed) {
      Int expect = 1;
      for (const Int& e : g.invariant_factors) expect *= gcd_int(Int(k), e);
      CHECK_MESSAGE(expect == Int(cnt), "k=", k);
    }
  }
}

TEST_CASE("projection is a homomorphism onto the tuples, killing the image") {
  ZMat a = zmat_of({{2, 1, 0}, {0, 3, 1}, {0, 0, 4}});
  FinAbGroup g = cokernel_group(a);
  CHECK(g.order() == 24);
  for (size_t j = 0; j < 3; ++j) {
    ZVec col{a[0][j], a[1][j], a[2][j]};
    for (const Int& t : g.project(col)) CHECK(t == 0);
  }
  std::set<std::vector<Int>> image;
  for (long long x = -6; x <= 6; ++x)
    for (long long y = -6; y <= 6; ++y)
      for (long long z = -6; z <= 6; ++z) image.insert(g.project({Int(x), Int(y), Int(z)}));
  CHECK(Int(image.size()) == g.order());
}

TEST_CASE("iso labels") {
  CHECK(cokernel_group(zmat_of({{1}})).iso_label() == "1");
  CHECK(cokernel_group(zmat_of({{6}})).iso_label() == "Z/6");
  CHECK(cokernel_group(zmat_of({{2, 0}, {0, 2}})).iso_label() == "(Z/2)^2");
  CHECK(cokernel_group(zmat_of({{2, 0, 0}, {0, 2, 0}, {0, 0, 4}})).iso_label() ==
        "(Z/2)^2 x Z/4");
}

TEST_CASE("torsion groups of elliptic representatives match the tables") {
  struct Case {
    char t;
    int n, m;
    std::string am, circ;
  };
  std::vector<Case> cases = {
      {'C', 2, 2, "(Z/2)^2", "Z/2"},    {'C', 2, 4, "Z/2", "1"},
      {'C', 4, 4, "(Z/2)^2", "Z/2"},    {'C', 4, 8, "Z/2", "1"},
      {'C', 3, 6, "Z/2", "1"},          {'D', 4, 4, "(Z/2)^2", "1"},
      {'G', 2, 2, "(Z/2)^2", "(Z/2)^2"}, {'G', 2, 3, "Z/3", "Z/3"},
      {'G', 2, 6, "1", "1"},            {'F', 4, 2, "(Z/2)^4", "(Z/2)^4"},
      {'F', 4, 3, "(Z/3)^2", "(Z/3)^2"}, {'F', 4, 4, "(Z/2)^2", "(Z/2)^2"},
      {'F', 4, 6, "1", "1"},            {'F', 4, 8, "Z/2", "Z/2"},
      {'F', 4, 12, "1", "1"},           {'E', 6, 3, "(Z/3)^3", "(Z/3)^2"},
      {'E', 6, 6, "Z/3", "1"},          {'E', 6, 9, "Z/3", "1"},
      {'E', 6, 12, "Z/3", "1"},         {'E', 7, 2, "(Z/2)^7", "(Z/2)^6"},
      {'E', 7, 6, "Z/2", "1"},          {'E', 7, 14, "Z/2", "1"},
      {'E', 7, 18, "Z/2", "1"},         {'E', 8, 2, "(Z/2)^8", "(Z/2)^8"},
      {'E', 8, 3, "(Z/3)^4", "(Z/3)^4"}, {'E', 8, 4, "(Z/2)^4", "(Z/2)^4"},
      {'E', 8, 5, "(Z/5)^2", "(Z/5)^2"}, {'E', 8, 6, "1", "1"},
      {'E', 8, 8, "(Z/2)^2", "(Z/2)^2"}, {'E', 8, 24, "1", "1"},
  };
  for (const auto& c : cases) {
    RootDatum rd(c.t, c.n);
    auto w = elliptic_rep(rd, c.m);
    REQUIRE_MESSAGE(w.has_value(), c.t, c.n, " m=", c.m);
    FinAbGroup full = a_m(rd, *w);
    FinAbGroup circ = a_m_circ(rd, *w);
    CHECK_MESSAGE(full.iso_label() == c.am, c.t, c.n, " m=", c.m);
    CHECK_MESSAGE(circ.iso_label() == c.circ, c.t, c.n, " m=", c.m);
    // |A_m| = |det(1-w)| = |A_m_circ| * |det C|
    IMat oneminus = imat_identity(c.n);
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j) oneminus[i][j] -= (*w)[i][j];
    CHECK(full.order() == abs(zmat_det(to_zmat(oneminus))));
    CHECK(full.order() == circ.order() * rd.cartan_det());
  }
}

TEST_CASE("Coxeter-case torsion: A_h_circ is trivial, A_h has order det C") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'C', 2}, {'B', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'F', 4}, {'G', 2}}) {
    RootDatum rd(t, n);
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = i + 1;
    IMat cox = rd.word_matrix(word);
    CHECK_MESSAGE(a_m_circ(rd, cox).order() == 1, t, n);
    CHECK_MESSAGE(a_m(rd, cox).order() == rd.cartan_det(), t, n);
  }
  RootDatum a3('A', 3);
  CHECK(a_m(a3, a3.word_matrix({1, 2, 3})).iso_label() == "Z/4");
}

TEST_CASE("invariant factors are a class invariant") {
  std::mt19937_64 rng(41);
  for (auto [t, n, m] : std::vector<std::tuple<char, int, int>>{
           {'C', 2, 2}, {'G', 2, 3}, {'F', 4, 4}, {'E', 6, 3}, {'D', 4, 4}}) {
    RootDatum rd(t, n);
    auto w = elliptic_rep(rd, m);
    REQUIRE(w.has_value());
    FinAbGroup base = a_m(rd, *w);
    for (int trial = 0; trial < 5; ++trial) {
      IMat g = random_weyl(rd, rng, 12);
      IMat ginv = qmat_to_imat_exact(qmat_inverse(to_qmat(g)));
      IMat conj = imat_mul(imat_mul(g, *w), ginv);
      CHECK(a_m(rd, conj).invariant_factors == base.invariant_factors);
      CHECK(a_m_circ(rd, conj).invariant_factors == a_m_circ(rd, *w).invariant_factors);
    }
  }
}

TEST_CASE("non-elliptic elements are rejected") {
  RootDatum c2('C', 2);
  CHECK_THROWS(a_m(c2, c2.simple_reflection(1)));
  CHECK_THROWS(a_m_circ(c2, imat_identity(2)));
}

TEST_CASE("orbit decomposition: small golden cases") {
  RootDatum g2('G', 2);
  auto w2 = elliptic_rep(g2, 2);
  REQUIRE(w2.has_value());
  auto z2 = centralizer(g2, *w2);
  CHECK(orbit_decomposition(g2, *w2, z2) == std::vector<Int>{1, 3});

  auto w3 = elliptic_rep(g2, 3);
  REQUIRE(w3.has_value());
  auto z3 = centralizer(g2, *w3);
  CHECK(orbit_decomposition(g2, *w3, z3) == std::vector<Int>{1, 2});

  auto w6 = elliptic_rep(g2, 6);
  REQUIRE(w6.has_value());
  CHECK(orbit_decomposition(g2, *w6, centralizer(g2, *w6)) == std::vector<Int>{1});

  RootDatum c2('C', 2);
  auto v = elliptic_rep(c2, 2);
  REQUIRE(v.has_value());
  CHECK(orbit_decomposition(c2, *v, centralizer(c2, *v)) == std::vector<Int>{1, 1});
}

TEST_CASE("orbit decomposition: reflection action on the even quotient") {
  // W(E8) on Q/2Q: zero, the root classes, and the rest; root classes are
  // the 120 nonzero classes where the halved norm form is odd
  RootDatum e8('E', 8);
  auto w = elliptic_rep(e8, 2);
  REQUIRE(w.has_value());
  auto z = centralizer(e8, *w);
  REQUIRE(z.method == "central");

  const IMat& c = e8.cartan();
  int q1 = 0, q0 = 0;
  for (int mask = 1; mask < 256; ++mask) {
    int q = 0;
    for (int i = 0; i < 8; ++i) {
      if (!(mask >> i & 1)) continue;
      ++q;
      for (int j = i + 1; j < 8; ++j)
        if (mask >> j & 1) q += (int)c[i][j];
    }
    (q % 2) ? ++q1 : ++q0;
  }
  CHECK(q1 == 120);
  CHECK(q0 == 135);
  CHECK(orbit_decomposition(e8, *w, z) == std::vector<Int>{1, Int(q1), Int(q0)});
}

TEST_CASE("orbit sizes always sum to the group order with a singleton zero") {
  for (auto [t, n, m] : std::vector<std::tuple<char, int, int>>{
           {'C', 4, 4}, {'D', 4, 4}, {'F', 4, 3}, {'F', 4, 4}, {'E', 6, 3}, {'E', 6, 6}}) {
    RootDatum rd(t, n);
    auto w = elliptic_rep(rd, m);
    REQUIRE(w.has_value());
    auto z = centralizer(rd, *w);
    auto sizes = orbit_decomposition(rd, *w, z);
    Int total = 0;
    for (const Int& s : sizes) total += s;
    CHECK_MESSAGE(total == a_m_circ(rd, *w).order(), t, n, " m=", m);
    CHECK(sizes.front() == 1);
  }
}
