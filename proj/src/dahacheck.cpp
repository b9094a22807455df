#include "weylkit/dahacheck.hpp"

#include "json.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wk {

namespace {

// order of the product s_i s_j as a matrix; 0 when it never closes up
// (parallel walls, e.g. the two reflections of affine A1)
int product_order(const IMat& a, const IMat& b, int cap = 60) {
  IMat p = imat_mul(a, b);
  IMat acc = p;
  for (int k = 1; k <= cap; ++k) {
    if (imat_is_identity(acc)) return k;
    acc = imat_mul(acc, p);
  }
  return 0;
}

QMat qmat_identity(int n) {
  QMat m(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

bool qmat_eq(const QMat& a, const QMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

QMat qmat_scale(const QMat& a, const Rat& t) {
  QMat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= t;
  return r;
}

QMat qmat_sub(const QMat& a, const QMat& b) {
  QMat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

// coweight-space coordinates of rho_check (half-sum of positive coroots)
QVec rho_check(const RootDatum& rd) {
  QVec r(rd.rank(), Rat(0));
  for (int i = 0; i < rd.num_pos(); ++i)
    for (int j = 0; j < rd.rank(); ++j)
      r[j] += rat_frac(rd.roots()[i].cor[j], 2);
  return r;
}

// affine coweight point (v, r): pairs with (mu, l) as mu.v + l*r
struct AffinePoint {
  QVec v;
  Rat r;
};

// dual action of the affine generators; letter 0 sends (v, r) to
// (s_theta v + r theta_check, r)
AffinePoint apply_letter(const RootDatum& rd, int letter, const AffinePoint& p) {
  AffinePoint q = p;
  if (letter == 0) {
    const Root& th = rd.highest_root();
    Rat pairing(0);
    for (int j = 0; j < rd.rank(); ++j) pairing += Rat(th.w[j]) * p.v[j];
    for (int j = 0; j < rd.rank(); ++j) q.v[j] += (p.r - pairing) * Rat(th.cor[j]);
  } else {
    int i = letter - 1;
    Rat pairing(0);
    for (int j = 0; j < rd.rank(); ++j) pairing += Rat(rd.cartan()[j][i]) * p.v[j];
    q.v[i] -= pairing;
  }
  return q;
}

QMat scalar1(const Rat& x) { return QMat{QVec{x}}; }

// weight = ^{word}(|c| rho_check, 1), word in composition order (leftmost
// letter applied last); the trivial module at c = -1/h keeps the weight of
// the sign module at 1/h (the two are swapped by the automorphism flipping
// the sign of both c and every s_i)
ModuleData one_dimensional(const RootDatum& rd, const Rat& c, const std::vector<int>& plus,
                           const std::vector<int>& word, const std::string& name) {
  ModuleData m;
  m.name = name;
  m.type = rd.type();
  m.rank = rd.rank();
  m.c = c;
  m.dim = 1;
  m.S.assign(rd.rank() + 1, scalar1(Rat(-1)));
  for (int i : plus) m.S[i] = scalar1(Rat(1));
  AffinePoint p{rho_check(rd), Rat(1)};
  Rat scale = c < Rat(0) ? -c : c;
  for (auto& x : p.v) x *= scale;
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = apply_letter(rd, *it, p);
  for (int j = 0; j < rd.rank(); ++j) m.Xi.push_back(scalar1(p.v[j]));
  m.Xi.push_back(scalar1(p.r));
  return m;
}

QMat qm(std::vector<std::vector<std::string>> rows) {
  QMat m;
  for (auto& r : rows) {
    QVec v;
    for (auto& s : r) v.push_back(rat_parse(s));
    m.push_back(v);
  }
  return m;
}

ModuleData diagonal_weights(const RootDatum& rd, const Rat& c,
                            const std::vector<std::vector<int>>& words,
                            std::vector<QMat> smats, const std::string& name) {
  ModuleData m;
  m.name = name;
  m.type = rd.type();
  m.rank = rd.rank();
  m.c = c;
  m.dim = (int)words.size();
  m.S = std::move(smats);
  std::vector<AffinePoint> pts;
  for (const auto& w : words) {
    AffinePoint p{rho_check(rd), Rat(1)};
    for (auto& x : p.v) x *= c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = apply_letter(rd, *it, p);
    pts.push_back(p);
  }
  for (int j = 0; j <= rd.rank(); ++j) {
    QMat xi(m.dim, QVec(m.dim, Rat(0)));
    for (int t = 0; t < m.dim; ++t) xi[t][t] = (j < rd.rank()) ? pts[t].v[j] : pts[t].r;
    m.Xi.push_back(xi);
  }
  return m;
}

}  // namespace

AffinePresentation affine_presentation(const RootDatum& rd) {
  const int n = rd.rank();
  AffinePresentation p;
  p.n = n;
  p.s.assign(n + 1, imat_identity(n + 1));
  p.coroot_pair.assign(n + 1, IVec(n + 1, 0));

  for (int i = 1; i <= n; ++i) {
    // mu -> mu - (mu . coroot_i) a_i; column i-1 of the Cartan matrix holds
    // the weight coordinates of a_i
    for (int r = 0; r < n; ++r) p.s[i][r][i - 1] -= rd.cartan()[r][i - 1];
    p.coroot_pair[i][i - 1] = 1;
  }

  const Root& th = rd.highest_root();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) p.s[0][r][c] -= th.w[r] * th.cor[c];
  for (int c = 0; c < n; ++c) {
    p.s[0][n][c] = th.cor[c];
    p.coroot_pair[0][c] = -th.cor[c];
  }

  p.cox.assign(n + 1, IVec(n + 1, 1));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      p.cox[i][j] = p.cox[j][i] = product_order(p.s[i], p.s[j]);
  return p;
}

RelationReport verify_module(const AffinePresentation& p, const ModuleData& m) {
  const int n = p.n;
  if ((int)m.S.size() != n + 1 || (int)m.Xi.size() != n + 1)
    throw std::invalid_argument("module does not match the rank of the presentation");
  for (const auto* fam : {&m.S, &m.Xi})
    for (const auto& mat : *fam) {
      if ((int)mat.size() != m.dim) throw std::invalid_argument("matrix size != dim");
      for (const auto& row : mat)
        if ((int)row.size() != m.dim) throw std::invalid_argument("matrix size != dim");
    }

  auto fail = [](std::string what) { return RelationReport{false, std::move(what)}; };
  const QMat id = qmat_identity(m.dim);

  for (int i = 0; i <= n; ++i)
    if (!qmat_eq(qmat_mul(m.S[i], m.S[i]), id))
      return fail("s" + std::to_string(i) + "^2 != 1");

  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int ord = p.cox[i][j];
      if (ord == 0) continue;  // parallel walls, no braid relation
      QMat prod = qmat_mul(m.S[i], m.S[j]);
      QMat acc = id;
      for (int k = 0; k < ord; ++k) acc = qmat_mul(acc, prod);
      if (!qmat_eq(acc, id))
        return fail("(s" + std::to_string(i) + " s" + std::to_string(j) + ")^" +
                    std::to_string(ord) + " != 1");
    }

  auto weight_name = [n](int j) { return j < n ? "o" + std::to_string(j + 1) : std::string("delta"); };

  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!qmat_eq(qmat_mul(m.Xi[a], m.Xi[b]), qmat_mul(m.Xi[b], m.Xi[a])))
        return fail("[xi_" + weight_name(a) + ", xi_" + weight_name(b) + "] != 0");

  if (!qmat_eq(m.Xi[n], id)) return fail("xi_delta != 1");

  // xi_lambda s_i - s_i xi_{s_i(lambda)} = -c (lambda . coroot_i), checked on
  // each basis weight; xi is additive, so xi_{s_i(lambda)} expands along the
  // integer column of the presentation matrix
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      QMat moved(m.dim, QVec(m.dim, Rat(0)));
      for (int k = 0; k <= n; ++k) {
        i64 coef = p.s[i][k][j];
        if (coef == 0) continue;
        for (int r = 0; r < m.dim; ++r)
          for (int c = 0; c < m.dim; ++c) moved[r][c] += Rat(coef) * m.Xi[k][r][c];
      }
      QMat lhs = qmat_sub(qmat_mul(m.Xi[j], m.S[i]), qmat_mul(m.S[i], moved));
      QMat rhs = qmat_scale(id, -m.c * Rat(p.coroot_pair[i][j]));
      if (!qmat_eq(lhs, rhs))
        return fail("cross relation at s" + std::to_string(i) + ", " + weight_name(j));
    }

  return {true, ""};
}

std::vector<ModuleData> builtin_modules() {
  std::vector<ModuleData> out;
  for (char t : {'A', 'C', 'G'}) {
    int rank = t == 'A' ? 1 : 2;
    RootDatum rd(t, rank);
    Rat h = Rat(Int(rd.coxeter_number()));
    std::string label = std::string(1, (char)std::tolower(t)) + std::to_string(rank);
    std::vector<int> all(rank + 1);
    std::iota(all.begin(), all.end(), 0);
    out.push_back(one_dimensional(rd, Rat(1) / h, {}, {}, label + " sign"));
    out.push_back(one_dimensional(rd, Rat(-1) / h, all, {}, label + " trivial"));
  }

  {
    RootDatum c2('C', 2);
    out.push_back(one_dimensional(c2, rat_frac(1, 2), {0}, {}, "c2 s0-fixed"));
    out.push_back(one_dimensional(c2, rat_frac(1, 2), {2}, {2, 0}, "c2 s2-fixed"));
  }

  {
    RootDatum g2('G', 2);
    out.push_back(diagonal_weights(
        g2, rat_frac(1, 3), {{}, {0}},
        {qm({{"1/2", "3/2"}, {"1/2", "-1/2"}}), qm({{"-1", "0"}, {"0", "-1"}}),
         qm({{"-1", "0"}, {"0", "1"}})},
        "g2 two-dimensional"));
    out.push_back(diagonal_weights(
        g2, rat_frac(1, 2), {{}, {0}, {2, 0}},
        {qm({{"1/3", "8", "0"}, {"1/9", "-1/3", "0"}, {"0", "0", "-1"}}),
         qm({{"-1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "1"}}),
         qm({{"-1", "0", "0"}, {"0", "1/2", "3"}, {"0", "1/4", "-1/2"}})},
        "g2 three-dimensional"));
  }
  return out;
}

ModuleData module_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ModuleData m;
  if (j.contains("name")) m.name = j["name"].get<std::string>();
  std::string type = j.at("type").get<std::string>();
  if (type.size() != 1) throw std::invalid_argument("type must be a single letter");
  m.type = type[0];
  m.rank = j.at("rank").get<int>();
  m.c = rat_parse(j.at("c").get<std::string>());
  m.dim = j.at("dim").get<int>();

  auto mat = [&](const nlohmann::json& v) {
    QMat out;
    for (const auto& row : v) {
      QVec r;
      for (const auto& x : row)
        r.push_back(x.is_string() ? rat_parse(x.get<std::string>()) : Rat(Int(x.get<long long>())));
      out.push_back(r);
    }
    return out;
  };

  const auto& S = j.at("S");
  for (int i = 0; i <= m.rank; ++i) m.S.push_back(mat(S.at(std::to_string(i))));
  const auto& Xi = j.at("Xi");
  for (int k = 0; k < m.rank; ++k) m.Xi.push_back(mat(Xi.at("o" + std::to_string(k + 1))));
  m.Xi.push_back(mat(Xi.at("delta")));
  return m;
}

std::string module_to_json(const ModuleData& m) {
  nlohmann::ordered_json j;
  if (!m.name.empty()) j["name"] = m.name;
  j["type"] = std::string(1, m.type);
  j["rank"] = m.rank;
  j["c"] = rat_str(m.c);
  j["dim"] = m.dim;
  auto mat = [](const QMat& q) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : q) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& x : row) r.push_back(rat_str(x));
      rows.push_back(r);
    }
    return rows;
  };
  for (size_t i = 0; i < m.S.size(); ++i) j["S"][std::to_string(i)] = mat(m.S[i]);
  for (int k = 0; k < m.rank; ++k) j["Xi"]["o" + std::to_string(k + 1)] = mat(m.Xi[k]);
  j["Xi"]["delta"] = mat(m.Xi[m.rank]);
  return j.dump(2) + "\n";
}

}  // namespace wk
