#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "weylkit/rootdata.hpp"
#include "weylkit/weylgrp.hpp"

using namespace wk;

namespace {

std::vector<int> en_table(char t, int n) {
  // classical lists, independent of the degree-based criterion
  if (t == 'A') return {n + 1};
  if (t == 'B' || t == 'C') {
    std::vector<int> v;
    for (int r = 1; r <= n; ++r)
      if (n % r == 0) v.push_back(2 * r);
    return v;
  }
  if (t == 'D') {
    switch (n) {
      case 4: return {2, 4, 6};
      case 5: return {8};
      case 6: return {2, 6, 10};
      case 7: return {4, 12};
      case 8: return {2, 4, 8, 14};
    }
  }
  if (t == 'E' && n == 6) return {3, 6, 9, 12};
  if (t == 'E' && n == 7) return {2, 6, 14, 18};
  if (t == 'E' && n == 8) return {2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30};
  if (t == 'F') return {2, 3, 4, 6, 8, 12};
  if (t == 'G') return {2, 3, 6};
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("order, det, ellipticity basics") {
  RootDatum g2('G', 2);
  IMat cox = g2.word_matrix({1, 2});
  CHECK(elt_order(cox) == 6);
  CHECK(elt_det(cox) == 1);
  CHECK(is_elliptic(cox));
  CHECK(is_elliptic(imat_pow(cox, 2)));
  CHECK(!is_elliptic(g2.simple_reflection(1)));
  CHECK(!is_elliptic(imat_identity(2)));
  CHECK(elt_det(g2.simple_reflection(1)) == -1);

  RootDatum e8('E', 8);
  IMat c8 = e8.word_matrix({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(elt_order(c8) == 30);
  CHECK(eigenspace_dim(c8, 30) == 1);
  CHECK(eigenspace_dim(imat_pow(c8, 2), 15) == 1);
  CHECK(eigenspace_dim(imat_identity(8), 1) == 8);
}

TEST_CASE("certification accepts regular elliptic powers and rejects others") {
  RootDatum e8('E', 8);
  IMat cox = e8.word_matrix({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(certify_elliptic_regular(e8, cox, 30));
  CHECK(certify_elliptic_regular(e8, imat_pow(cox, 2), 15));
  CHECK(certify_elliptic_regular(e8, imat_pow(cox, 3), 10));
  CHECK(certify_elliptic_regular(e8, imat_pow(cox, 5), 6));
  CHECK(certify_elliptic_regular(e8, imat_pow(cox, 6), 5));
  CHECK(certify_elliptic_regular(e8, imat_pow(cox, 15), 2));
  CHECK(!certify_elliptic_regular(e8, cox, 15));           // wrong order
  CHECK(!certify_elliptic_regular(e8, imat_identity(8), 1));  // not elliptic
  CHECK(!certify_elliptic_regular(e8, e8.simple_reflection(1), 2));

  // order-7 elements of W(A6) are regular elliptic
  RootDatum a6('A', 6);
  IMat c = a6.word_matrix({1, 2, 3, 4, 5, 6});
  CHECK(certify_elliptic_regular(a6, c, 7));
}

TEST_CASE("elliptic order-4 elements of B3 are not regular") {
  // their i-eigenvectors all lie on a coordinate hyperplane, even though the
  // eigenspace dimension is maximal
  RootDatum b3('B', 3);
  std::vector<IMat> gens;
  for (int i = 1; i <= 3; ++i) gens.push_back(b3.simple_reflection(i));
  auto all = subgroup_closure(b3, gens, 100);
  REQUIRE(all.has_value());
  int seen = 0;
  for (const auto& w : *all)
    if (is_elliptic(w) && elt_order(w) == 4) {
      ++seen;
      CHECK(eigenspace_dim(w, 4) == 1);
      CHECK(!certify_elliptic_regular(b3, w, 4));
    }
  CHECK(seen > 0);
}

TEST_CASE("elliptic numbers match the classical tables") {
  std::vector<std::pair<char, int>> all = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5},
                                           {'A', 6}, {'A', 7}, {'A', 8}, {'B', 2}, {'B', 3},
                                           {'B', 4}, {'B', 5}, {'B', 6}, {'B', 7}, {'B', 8},
                                           {'C', 3}, {'C', 5}, {'C', 8}, {'D', 4}, {'D', 5},
                                           {'D', 6}, {'D', 7}, {'D', 8}, {'E', 6}, {'E', 7},
                                           {'E', 8}, {'F', 4}, {'G', 2}};
  for (auto [t, n] : all) {
    RootDatum rd(t, n);
    CHECK_MESSAGE(elliptic_numbers(rd) == en_table(t, n), t, n);
  }
}

TEST_CASE("elliptic numbers agree with exhaustive enumeration on small groups") {
  std::vector<std::pair<char, int>> small = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5},
                                             {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4},
                                             {'D', 4}, {'D', 5}, {'F', 4}, {'G', 2}};
  for (auto [t, n] : small) {
    RootDatum rd(t, n);
    CHECK_MESSAGE(elliptic_numbers_exhaustive(rd) == elliptic_numbers(rd), t, n);
  }
  CHECK_THROWS(elliptic_numbers_exhaustive(RootDatum('E', 8)));
}

TEST_CASE("seed words have the advertised orders") {
  CHECK(elt_order(RootDatum('F', 4).word_matrix({1, 2, 3, 2, 3, 4})) == 8);
  CHECK(elt_order(RootDatum('E', 6).word_matrix({1, 2, 3, 4, 2, 5, 4, 6})) == 9);
  CHECK(elt_order(RootDatum('E', 7).word_matrix({1, 2, 3, 4, 2, 5, 4, 6, 7})) == 14);
  CHECK(elt_order(RootDatum('E', 8).word_matrix({1, 2, 3, 4, 2, 5, 4, 6, 7, 8})) == 24);
  CHECK(elt_order(RootDatum('E', 8).word_matrix({1, 2, 3, 4, 2, 5, 4, 6, 5, 4, 7, 8})) == 20);
  for (auto [t, n] : std::vector<std::pair<char, int>>{
           {'A', 5}, {'B', 4}, {'C', 6}, {'D', 5}, {'E', 7}, {'F', 4}, {'G', 2}}) {
    RootDatum rd(t, n);
    for (const auto& wd : seed_words(rd)) CHECK(elt_order(rd.word_matrix(wd)) % 1 == 0);
    CHECK(elt_order(rd.word_matrix(seed_words(rd)[0])) == rd.coxeter_number());
  }
}

TEST_CASE("a certified representative exists for every elliptic number") {
  std::vector<std::pair<char, int>> types = {{'A', 4}, {'A', 7}, {'B', 6}, {'C', 4}, {'D', 4},
                                             {'D', 5}, {'D', 6}, {'D', 7}, {'D', 8}, {'E', 6},
                                             {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (auto [t, n] : types) {
    RootDatum rd(t, n);
    for (int m : elliptic_numbers(rd)) {
      auto w = elliptic_rep(rd, m);
      REQUIRE_MESSAGE(w.has_value(), t, n, " m=", m);
      CHECK(certify_elliptic_regular(rd, *w, m));
    }
    CHECK(!elliptic_rep(rd, rd.coxeter_number() + 1).has_value());
  }
}

TEST_CASE("representatives are deterministic for a fixed seed") {
  RootDatum d6('D', 6);
  auto w1 = elliptic_rep(d6, 6, 1);
  auto w2 = elliptic_rep(d6, 6, 1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == *w2);
}

TEST_CASE("subgroup closure enumerates small subgroups and respects budgets") {
  RootDatum a2('A', 2);
  auto whole = subgroup_closure(a2, {a2.simple_reflection(1), a2.simple_reflection(2)}, 100);
  REQUIRE(whole.has_value());
  CHECK(whole->size() == 6);
  auto one = subgroup_closure(a2, {a2.simple_reflection(1)}, 100);
  REQUIRE(one.has_value());
  CHECK(one->size() == 2);

  RootDatum e6('E', 6);
  std::vector<IMat> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(e6.simple_reflection(i));
  CHECK(!subgroup_closure(e6, gens, 100).has_value());
}

TEST_CASE("element keys separate all elements of a small group") {
  RootDatum b3('B', 3);
  std::vector<IMat> gens;
  for (int i = 1; i <= 3; ++i) gens.push_back(b3.simple_reflection(i));
  auto all = subgroup_closure(b3, gens, 100);
  REQUIRE(all.has_value());
  REQUIRE(all->size() == 48);
  std::set<uint64_t> keys;
  for (const auto& w : *all) keys.insert(elt_key(b3, w));
  CHECK(keys.size() == 48);
}

TEST_CASE("centralizer: central and cyclic shortcuts") {
  RootDatum c2('C', 2);
  IMat minus = imat_pow(c2.word_matrix({1, 2}), 2);
  auto z = centralizer(c2, minus);
  CHECK(z.method == "central");
  CHECK(z.order == 8);
  CHECK(z.verified);

  RootDatum g2('G', 2);
  auto z2 = centralizer(g2, imat_pow(g2.word_matrix({1, 2}), 2));  // order 3
  CHECK(z2.method == "cyclic");
  CHECK(z2.order == 6);
  CHECK(z2.elements.size() == 6);

  auto z6 = centralizer(g2, g2.word_matrix({1, 2}));  // Coxeter element
  CHECK(z6.method == "cyclic");
  CHECK(z6.order == 6);

  CHECK_THROWS(centralizer(g2, g2.simple_reflection(1)));
}

TEST_CASE("centralizer: conjugacy-class search") {
  struct Case {
    char t;
    int n, m;
    long long order, cls;
  };
  // centralizer order = product of degrees divisible by m; class = |W| / that
  std::vector<Case> cases = {
      {'F', 4, 6, 72, 16},   {'F', 4, 4, 96, 12},    {'F', 4, 3, 72, 16},
      {'C', 4, 4, 32, 12},   {'D', 4, 4, 16, 12},    {'D', 7, 4, 384, 840},
      {'E', 6, 3, 648, 80},  {'E', 6, 6, 72, 720},   {'E', 7, 6, 1296, 2240},
  };
  for (const auto& c : cases) {
    RootDatum rd(c.t, c.n);
    auto w = elliptic_rep(rd, c.m);
    REQUIRE_MESSAGE(w.has_value(), c.t, c.n, " m=", c.m);
    auto z = centralizer(rd, *w);
    CHECK_MESSAGE(z.order == Int(c.order), c.t, c.n, " m=", c.m);
    CHECK(z.verified);
    if (z.method == "class-bfs") CHECK(z.class_size == Int(c.cls));
    Int oracle = 1;
    for (int i : rd.i_m(c.m)) oracle *= rd.degrees()[i - 1];
    CHECK(z.order == oracle);
  }
}

TEST_CASE("centralizer respects the class budget") {
  RootDatum e6('E', 6);
  auto w = elliptic_rep(e6, 6);
  REQUIRE(w.has_value());
  auto z = centralizer(e6, *w, 10);
  CHECK(z.method == "budget-exceeded");
  CHECK(!z.verified);
}

TEST_CASE("reflection subgroups: closure, type recognition, enumeration") {
  RootDatum g2('G', 2);
  int theta = g2.root_index(g2.highest_root().a);
  int a2 = g2.root_index({0, 1});
  auto longs = reflection_subgroup(g2, {a2, theta});
  CHECK(longs.cartan_type == "A2");
  CHECK(longs.order == 6);
  REQUIRE(longs.enumerated);
  CHECK(longs.elements.size() == 6);
  int detsum = 0;
  for (int d : longs.dets) detsum += d;
  CHECK(detsum == 0);  // three reflections, three rotations

  auto whole = reflection_subgroup(g2, {g2.root_index({1, 0}), a2});
  CHECK(whole.cartan_type == "G2");
  CHECK(whole.order == 12);

  auto empty = reflection_subgroup(g2, {});
  CHECK(empty.cartan_type == "1");
  CHECK(empty.elements.size() == 1);
  CHECK(empty.dets == std::vector<int>{1});

  RootDatum b3('B', 3);
  auto bc = reflection_subgroup(b3, {b3.root_index({0, 1, 0}), b3.root_index({0, 0, 1})});
  CHECK(bc.cartan_type == "B2");
  CHECK(bc.order == 8);

  RootDatum d5('D', 5);
  auto d4 = reflection_subgroup(
      d5, {d5.root_index({0, 1, 0, 0, 0}), d5.root_index({0, 0, 1, 0, 0}),
           d5.root_index({0, 0, 0, 1, 0}), d5.root_index({0, 0, 0, 0, 1})});
  CHECK(d4.cartan_type == "D4");
  CHECK(d4.order == 192);

  RootDatum e7('E', 7);
  std::vector<int> orth;
  for (int i : {2, 5, 7}) {
    IVec v(7, 0);
    v[i - 1] = 1;
    orth.push_back(e7.root_index(v));
  }
  auto a111 = reflection_subgroup(e7, orth);
  CHECK(a111.cartan_type == "A1+A1+A1");
  CHECK(a111.order == 8);

  RootDatum e8('E', 8);
  std::vector<int> simp;
  for (int i = 0; i < 8; ++i) {
    IVec v(8, 0);
    v[i] = 1;
    simp.push_back(e8.root_index(v));
  }
  auto full = reflection_subgroup(e8, simp);
  CHECK(full.cartan_type == "E8");
  CHECK(full.order == e8.weyl_order());
  CHECK(!full.enumerated);  // past the default budget

  RootDatum a3('A', 3);
  auto fulla = reflection_subgroup(a3, {a3.root_index({1, 0, 0}), a3.root_index({0, 1, 0}),
                                        a3.root_index({0, 0, 1})});
  CHECK(fulla.cartan_type == "A3");
  REQUIRE(fulla.enumerated);
  CHECK(fulla.elements.size() == 24);
  int neg = 0;
  for (int d : fulla.dets) neg += (d < 0);
  CHECK(neg == 12);
}
