#include "weylkit/affine.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace wk {

namespace {

// proper remainder, always in [0, m)
i64 imod(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

bool affine_positive(const RootDatum& rd, int root, const Rat& level) {
  if (level != Rat(0)) return level > Rat(0);
  return root < rd.num_pos();
}

std::string alcove_key(const Alcove& a) {
  std::string k;
  k.reserve((a.lin.size() * a.lin.size() + a.tr.size()) * sizeof(i64));
  for (const auto& row : a.lin)
    k.append(reinterpret_cast<const char*>(row.data()), row.size() * sizeof(i64));
  k.append(reinterpret_cast<const char*>(a.tr.data()), a.tr.size() * sizeof(i64));
  return k;
}

}  // namespace

std::vector<AffineRoot> delta_c_plus(const RootDatum& rd, const Slope& s) {
  std::vector<AffineRoot> out;
  for (int i = 0; i < (int)rd.roots().size(); ++i) {
    i64 ht = rd.roots()[i].ht;
    if (imod(ht, s.m) != 0) continue;
    Rat level = rat_frac(Int(-s.k * ht), Int(s.m));
    if (affine_positive(rd, i, level)) out.push_back({i, level});
  }
  return out;
}

std::vector<AffineRoot> frak_d_c(const RootDatum& rd, const Slope& s) {
  std::vector<AffineRoot> out;
  for (int i = 0; i < (int)rd.roots().size(); ++i) {
    i64 ht = rd.roots()[i].ht;
    if (imod(1 - ht, s.m) != 0) continue;
    out.push_back({i, rat_frac(Int(s.k * (1 - ht)), Int(s.m))});
  }
  return out;
}

std::vector<AffineRoot> pi_c(const RootDatum& rd, const Slope& s) {
  auto plus = delta_c_plus(rd, s);
  std::set<int> in_set;
  for (const auto& ar : plus) in_set.insert(ar.root);
  std::vector<AffineRoot> out;
  for (const auto& ar : plus) {
    bool decomposable = false;
    for (const auto& x : plus) {
      IVec diff = rd.roots()[ar.root].a;
      for (int j = 0; j < rd.rank(); ++j) diff[j] -= rd.roots()[x.root].a[j];
      int rest = rd.root_index(diff);
      if (rest >= 0 && in_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(ar);
  }
  return out;
}

std::string Alcove::name() const {
  if (word.empty()) return "1";
  std::string s;
  for (int l : word) s += "s" + std::to_string(l);
  return s;
}

Alcove fundamental_alcove(const RootDatum& rd) {
  Alcove a;
  a.lin = imat_identity(rd.rank());
  a.tr = IVec(rd.rank(), 0);
  return a;
}

Alcove alcove_step(const RootDatum& rd, const Alcove& a, int letter) {
  int n = rd.rank();
  IMat s;
  IVec t(n, 0);
  if (letter == 0) {
    s = imat_transpose(rd.reflection(rd.highest_root_index()));
    t = rd.highest_root().cov;
  } else {
    s = imat_transpose(rd.simple_reflection(letter));
  }
  Alcove b;
  b.lin = imat_mul(a.lin, s);
  b.tr = a.tr;
  for (int i = 0; i < n; ++i) {
    i64 acc = 0;
    for (int j = 0; j < n; ++j) acc += a.lin[i][j] * t[j];
    b.tr[i] += acc;
  }
  b.word = a.word;
  b.word.push_back(letter);
  return b;
}

QVec alcove_center(const RootDatum& rd, const Alcove& a) {
  int n = rd.rank();
  Int h = rd.coxeter_number();
  QVec x(n);
  for (int i = 0; i < n; ++i) {
    i64 rowsum = 0;
    for (int j = 0; j < n; ++j) rowsum += a.lin[i][j];
    x[i] = rat_frac(Int(rowsum) + h * Int(a.tr[i]), h);
  }
  return x;
}

Rat eval_affine(const RootDatum& rd, const AffineRoot& ar, const QVec& x) {
  Rat v = ar.level;
  const IVec& u = rd.roots()[ar.root].a;
  for (int j = 0; j < rd.rank(); ++j) v += Rat(Int(u[j])) * x[j];
  return v;
}

bool in_wc(const RootDatum& rd, const Slope& s, const Alcove& a) {
  QVec x = alcove_center(rd, a);
  for (const auto& ar : delta_c_plus(rd, s))
    if (eval_affine(rd, ar, x) <= Rat(0)) return false;
  return true;
}

std::vector<AffineRoot> frak_d_cw(const RootDatum& rd, const Slope& s, const Alcove& a) {
  QVec x = alcove_center(rd, a);
  std::vector<AffineRoot> out;
  for (const auto& ar : frak_d_c(rd, s)) {
    Rat v = eval_affine(rd, ar, x);
    if (v == Rat(0)) throw std::runtime_error("alcove center on a weight-one wall");
    if (v < Rat(0)) out.push_back(ar);
  }
  return out;
}

std::vector<Alcove> enumerate_alcoves(const RootDatum& rd, int radius) {
  std::vector<Alcove> out;
  std::unordered_map<std::string, size_t> seen;
  std::deque<size_t> queue;
  out.push_back(fundamental_alcove(rd));
  seen.emplace(alcove_key(out[0]), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    if ((int)out[cur].word.size() >= radius) continue;
    for (int letter = 0; letter <= rd.rank(); ++letter) {
      Alcove next = alcove_step(rd, out[cur], letter);
      auto [it, fresh] = seen.emplace(alcove_key(next), out.size());
      if (!fresh) continue;
      out.push_back(std::move(next));
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

namespace {

// one inequality c.x >= b, coefficients normalized by their gcd
struct Ineq {
  ZVec c;
  Int b;
  bool operator<(const Ineq& o) const {
    if (c != o.c) return c < o.c;
    return b < o.b;
  }
};

bool normalize(Ineq& q) {  // false: drop the row (trivially satisfied)
  Int g = 0;
  bool any = false;
  for (const auto& v : q.c) {
    if (v != 0) any = true;
    g = gcd_int(g, v);
  }
  if (!any) {
    if (q.b > 0) throw std::domain_error("infeasible");
    return false;
  }
  g = gcd_int(g, q.b);
  if (g > 1) {
    for (auto& v : q.c) v /= g;
    q.b /= g;
  }
  return true;
}

bool fm_feasible(std::vector<Ineq> rows, int nvars) {
  const size_t kRowCap = 500000;
  std::vector<int> alive(nvars, 1);
  try {
    for (int step = 0; step < nvars; ++step) {
      // cheapest variable first: smallest pos*neg fan-out
      int best = -1;
      size_t best_cost = ~size_t(0);
      for (int j = 0; j < nvars; ++j) {
        if (!alive[j]) continue;
        size_t pos = 0, neg = 0;
        for (const auto& r : rows) {
          if (r.c[j] > 0) ++pos;
          else if (r.c[j] < 0) ++neg;
        }
        size_t cost = pos * neg;
        if (cost < best_cost) {
          best_cost = cost;
          best = j;
        }
      }
      int j = best;
      alive[j] = 0;
      std::vector<Ineq> pos, neg, zero;
      for (auto& r : rows) {
        if (r.c[j] > 0) pos.push_back(std::move(r));
        else if (r.c[j] < 0) neg.push_back(std::move(r));
        else zero.push_back(std::move(r));
      }
      std::set<Ineq> fresh;
      for (const auto& p : pos)
        for (const auto& q : neg) {
          Ineq r;
          r.c.resize(nvars);
          Int pm = -q.c[j], qm = p.c[j];
          for (int t = 0; t < nvars; ++t) r.c[t] = pm * p.c[t] + qm * q.c[t];
          r.b = pm * p.b + qm * q.b;
          if (normalize(r)) fresh.insert(std::move(r));
          if (fresh.size() + zero.size() > kRowCap)
            throw std::runtime_error("fourier-motzkin row cap exceeded");
        }
      rows = std::move(zero);
      rows.insert(rows.end(), fresh.begin(), fresh.end());
    }
  } catch (const std::domain_error&) {
    return false;  // derived 0 >= positive
  }
  for (const auto& r : rows)
    if (r.b > 0) return false;
  return true;
}

}  // namespace

bool recession_cone_trivial(const RootDatum& rd, const std::vector<AffineRoot>& dc,
                            const std::vector<int>& signs) {
  int n = rd.rank();
  std::set<ZVec> uniq;
  for (size_t i = 0; i < dc.size(); ++i) {
    ZVec row(n);
    for (int j = 0; j < n; ++j) row[j] = Int(signs[i]) * Int(rd.roots()[dc[i].root].a[j]);
    uniq.insert(std::move(row));
  }
  std::vector<ZVec> forms(uniq.begin(), uniq.end());

  // a nonzero common kernel vector is a recession line
  QMat stacked(forms.size(), QVec(n));
  for (size_t i = 0; i < forms.size(); ++i)
    for (int j = 0; j < n; ++j) stacked[i][j] = Rat(forms[i][j]);
  if (!qmat_kernel(stacked).empty()) return false;

  // otherwise any nonzero cone point has (sum of forms).x > 0, so scale it
  std::vector<Ineq> rows;
  ZVec total(n, 0);
  for (const auto& f : forms) {
    Ineq q{f, Int(0)};
    if (normalize(q)) rows.push_back(std::move(q));
    for (int j = 0; j < n; ++j) total[j] += f[j];
  }
  Ineq goal{total, Int(1)};
  try {
    if (normalize(goal)) rows.push_back(std::move(goal));
  } catch (const std::domain_error&) {
    return true;  // sum of forms vanished: 0 >= 1 immediately
  }
  return !fm_feasible(std::move(rows), n);
}

ClanTable enumerate_clans(const RootDatum& rd, const Slope& s, int radius) {
  ClanTable table;
  table.dc = frak_d_c(rd, s);
  std::map<std::vector<int>, size_t> clan_of;
  for (auto& a : enumerate_alcoves(rd, radius)) {
    if (!in_wc(rd, s, a)) continue;
    QVec x = alcove_center(rd, a);
    std::vector<int> sig(table.dc.size());
    for (size_t i = 0; i < table.dc.size(); ++i) {
      Rat v = eval_affine(rd, table.dc[i], x);
      if (v == Rat(0)) throw std::runtime_error("alcove center on a weight-one wall");
      sig[i] = v > Rat(0) ? 1 : -1;
    }
    auto [it, fresh] = clan_of.emplace(sig, table.clans.size());
    if (fresh) {
      Clan c;
      c.sign_vector = sig;
      c.bounded = recession_cone_trivial(rd, table.dc, sig);
      table.clans.push_back(std::move(c));
    }
    table.clans[it->second].members.push_back(a.name());
    table.clans[it->second].member_idx.push_back(table.wc_alcoves.size());
    table.wc_alcoves.push_back(std::move(a));
  }
  return table;
}

WeightBoundReport check_335a(const RootDatum& rd, const Slope& s, int radius) {
  WeightBoundReport rep;
  rep.n_c = (int)delta_c_plus(rd, s).size();
  rep.pass = true;
  for (const auto& a : enumerate_alcoves(rd, radius)) {
    bool zero_translation = true;
    for (i64 t : a.tr)
      if (t != 0) zero_translation = false;
    if (!zero_translation || !in_wc(rd, s, a)) continue;
    ++rep.checked;
    int d = (int)frak_d_cw(rd, s, a).size();
    bool fundamental = a.word.empty();
    bool ok = fundamental ? d == rep.n_c : d > rep.n_c;
    if (!ok) {
      rep.pass = false;
      rep.counterexample =
          a.name() + ": |D_c,w| = " + std::to_string(d) + ", n_c = " + std::to_string(rep.n_c);
      return rep;
    }
  }
  return rep;
}

}  // namespace wk
