#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylkit/rootdata.hpp"

#include <map>
#include <set>

using namespace wk;

namespace {

struct TypeInfo {
  char type;
  int rank;
  std::vector<int> degrees;  // classical tables, used only as a cross-check
  i64 center;
};

const std::vector<TypeInfo>& table() {
  static std::vector<TypeInfo> t = [] {
    std::vector<TypeInfo> v;
    for (int n = 1; n <= 8; ++n) {
      std::vector<int> d;
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      v.push_back({'A', n, d, n + 1});
    }
    for (char bc : {'B', 'C'})
      for (int n = 2; n <= 8; ++n) {
        std::vector<int> d;
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        v.push_back({bc, n, d, 2});
      }
    for (int n = 4; n <= 8; ++n) {
      std::vector<int> d;
      for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      v.push_back({'D', n, d, 4});
    }
    v.push_back({'E', 6, {2, 5, 6, 8, 9, 12}, 3});
    v.push_back({'E', 7, {2, 6, 8, 10, 12, 14, 18}, 2});
    v.push_back({'E', 8, {2, 8, 12, 14, 18, 20, 24, 30}, 1});
    v.push_back({'F', 4, {2, 6, 8, 12}, 1});
    v.push_back({'G', 2, {2, 6}, 1});
    return v;
  }();
  return t;
}

}  // namespace

TEST_CASE("degrees, exponents, coxeter number against the classical tables") {
  for (const auto& ti : table()) {
    RootDatum rd(ti.type, ti.rank);
    CAPTURE(rd.label());
    CHECK(rd.degrees() == ti.degrees);
    CHECK(rd.coxeter_number() == ti.degrees.back());
    // sum of exponents = number of positive roots = n*h/2
    i64 se = 0;
    for (int e : rd.exponents()) se += e;
    CHECK(se == rd.num_pos());
    CHECK(2 * rd.num_pos() == ti.rank * rd.coxeter_number());
    Int w = 1;
    for (int d : ti.degrees) w *= d;
    CHECK(rd.weyl_order() == w);
    CHECK(rd.center_order() == Int(ti.center));
  }
}

TEST_CASE("root lists are closed, consistent, and correctly indexed") {
  for (const auto& ti : table()) {
    RootDatum rd(ti.type, ti.rank);
    CAPTURE(rd.label());
    int n = rd.rank(), npos = rd.num_pos();
    REQUIRE((int)rd.roots().size() == 2 * npos);
    std::set<IVec> all;
    for (int i = 0; i < 2 * npos; ++i) {
      const Root& r = rd.roots()[i];
      all.insert(r.a);
      // height and sign layout
      i64 h = 0;
      for (i64 x : r.a) h += x;
      CHECK(h == r.ht);
      CHECK((i < npos) == (r.ht > 0));
      CHECK(rd.negate_index(rd.negate_index(i)) == i);
      const Root& m = rd.roots()[rd.negate_index(i)];
      for (int j = 0; j < n; ++j) CHECK(m.a[j] == -r.a[j]);
      // weight coordinates = C * a, and <a, coroot(a)> = 2
      CHECK(r.w == imat_apply(rd.cartan(), r.a));
      CHECK(ivec_dot(r.cov, r.a) == 2);
      CHECK(rd.root_index(r.a) == i);
    }
    CHECK((int)all.size() == 2 * npos);
    // closure under all reflections, and reflections are involutions
    for (int i = 0; i < 2 * npos; ++i) {
      IMat s = rd.reflection(i);
      CHECK(imat_is_identity(imat_mul(s, s)));
      for (int j = 0; j < 2 * npos; ++j)
        CHECK(rd.root_index(imat_apply(s, rd.roots()[j].a)) != -1);
      // s_a(a) = -a
      CHECK(rd.root_index(imat_apply(s, rd.roots()[i].a)) == rd.negate_index(i));
    }
    // highest root: height h-1, pairing with every simple coroot >= 0
    const Root& th = rd.highest_root();
    CHECK(th.ht == rd.coxeter_number() - 1);
    for (int j = 0; j < n; ++j) CHECK(th.w[j] >= 0);
  }
}

TEST_CASE("norm propagation matches the marked Dynkin diagrams") {
  RootDatum f4('F', 4);
  CHECK(f4.roots()[f4.root_index({1, 0, 0, 0})].norm == 2);
  CHECK(f4.roots()[f4.root_index({0, 0, 1, 0})].norm == 1);
  RootDatum g2('G', 2);
  CHECK(g2.roots()[g2.root_index({1, 0})].norm == 1);
  CHECK(g2.roots()[g2.root_index({0, 1})].norm == 3);
  RootDatum c3('C', 3);
  CHECK(c3.roots()[c3.root_index({0, 0, 1})].norm == 2);
  CHECK(c3.roots()[c3.root_index({1, 0, 0})].norm == 1);
  RootDatum b3('B', 3);
  CHECK(b3.roots()[b3.root_index({0, 0, 1})].norm == 1);
  CHECK(b3.roots()[b3.root_index({1, 0, 0})].norm == 2);
}

TEST_CASE("highest roots and specific Cartan entries") {
  CHECK(RootDatum('C', 2).highest_root().a == IVec{2, 1});
  CHECK(RootDatum('G', 2).highest_root().a == IVec{3, 2});
  CHECK(RootDatum('F', 4).highest_root().a == IVec{2, 3, 4, 2});
  CHECK(RootDatum('E', 8).highest_root().a == IVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootDatum('B', 4).highest_root().a == IVec{1, 2, 2, 2});
  CHECK(RootDatum('D', 5).highest_root().a == IVec{1, 2, 2, 1, 1});
  // asymmetric entries sit where the short roots are
  RootDatum c2('C', 2);
  CHECK(c2.cartan()[0][1] == -2);  // <a_2, coroot_1>, a_1 short
  CHECK(c2.cartan()[1][0] == -1);
  RootDatum g2('G', 2);
  CHECK(g2.cartan()[0][1] == -3);
  RootDatum f4('F', 4);
  CHECK(f4.cartan()[2][1] == -2);  // <a_2, coroot_3>
  CHECK(f4.cartan()[1][2] == -1);
}

TEST_CASE("i_m picks out the degrees divisible by m") {
  RootDatum e8('E', 8);
  CHECK(e8.i_m(4) == std::vector<int>{2, 3, 6, 7});
  CHECK(e8.i_m(20) == std::vector<int>{6});
  CHECK(e8.i_m(30) == std::vector<int>{8});
  CHECK(e8.i_m(7) == std::vector<int>{4});
  CHECK(e8.i_m(11) == std::vector<int>{});
  RootDatum e6('E', 6);
  CHECK(e6.i_m(3) == std::vector<int>{3, 5, 6});
  CHECK(e6.i_m(9) == std::vector<int>{5});
  RootDatum f4('F', 4);
  CHECK(f4.i_m(6) == std::vector<int>{2, 4});
  CHECK(f4.i_m(8) == std::vector<int>{3});
}

TEST_CASE("word_matrix multiplies simple reflections in order") {
  RootDatum g2('G', 2);
  IMat w = g2.word_matrix({1, 2});
  IMat expect = imat_mul(g2.simple_reflection(1), g2.simple_reflection(2));
  CHECK(w == expect);
  CHECK_THROWS_AS(g2.word_matrix({3}), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('Z', 2), std::invalid_argument);
}

TEST_CASE("charpoly and cyclotomic helpers") {
  // companion matrix of x^3 - 2x + 5
  ZMat m = {{Int(0), Int(0), Int(-5)}, {Int(1), Int(0), Int(2)}, {Int(0), Int(1), Int(0)}};
  ZVec cp = charpoly(m);
  CHECK(cp == ZVec{Int(5), Int(-2), Int(0), Int(1)});
  CHECK(cyclotomic(1) == ZVec{Int(-1), Int(1)});
  CHECK(cyclotomic(6) == ZVec{Int(1), Int(-1), Int(1)});
  CHECK(cyclotomic(12) == ZVec{Int(1), Int(0), Int(-1), Int(0), Int(1)});
  // (x-1)^2 (x+1): multiplicity of each factor
  ZVec p = poly_mul(poly_mul(cyclotomic(1), cyclotomic(1)), cyclotomic(2));
  CHECK(cyclotomic_multiplicity(p, 1) == 2);
  CHECK(cyclotomic_multiplicity(p, 2) == 1);
  CHECK(cyclotomic_multiplicity(p, 3) == 0);
}
