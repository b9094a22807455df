// weylkit command-line surface: classification tables, localization checks,
// clan enumeration, module verification, and the golden self-test.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylkit/affine.hpp"
#include "weylkit/dahacheck.hpp"
#include "weylkit/localize.hpp"
#include "weylkit/selftest.hpp"
#include "weylkit/torsion.hpp"
#include "weylkit/weylgrp.hpp"

using ojson = nlohmann::ordered_json;

namespace {

long long to_ll(const wk::Int& x) { return x.convert_to<long long>(); }

wk::RootDatum make_datum(const std::string& type, int rank) {
  if (type.size() != 1 || !std::isalpha((unsigned char)type[0]))
    throw std::invalid_argument("type must be a single letter A..G");
  return wk::RootDatum((char)std::toupper((unsigned char)type[0]), rank);
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const std::string& type, int rank, bool deep) {
  wk::RootDatum rd = make_datum(type, rank);
  ojson out;
  out["label"] = rd.label();
  out["weyl_order"] = to_ll(rd.weyl_order());
  out["coxeter_number"] = rd.coxeter_number();
  out["degrees"] = rd.degrees();
  out["elliptic_numbers"] = wk::elliptic_numbers(rd);
  out["cases"] = ojson::array();
  for (int m : wk::elliptic_numbers(rd)) {
    ojson row;
    row["m"] = m;
    auto im = rd.i_m(m);
    row["i_m"] = im;
    wk::Int wm = 1;
    for (int i : im) wm *= wk::Int(rd.degrees()[i - 1]);
    row["w_m_order"] = to_ll(wm);
    auto w = wk::elliptic_rep(rd, m);
    if (!w) {
      row["error"] = "no certified representative found";
      out["cases"].push_back(row);
      continue;
    }
    row["a_m"] = wk::a_m(rd, *w).iso_label();
    wk::FinAbGroup a0 = wk::a_m_circ(rd, *w);
    row["a_m_circ"] = a0.iso_label();
    if (a0.order() == 1) {
      row["orbit_sizes"] = {1};
      row["spherical_factors"] = 1;
    } else {
      wk::Int class_est = rd.weyl_order() / wm;
      if (class_est > 250000)
        std::cerr << "classify: m=" << m << " centralizer class has " << class_est.str()
                  << " elements, computing...\n";
      wk::Centralizer z = wk::centralizer(rd, *w, deep ? size_t(6000000) : size_t(500000));
      if (!z.verified) {
        row["orbit_sizes"] = nullptr;
        row["note"] = "centralizer class exceeds the budget; rerun with --deep";
      } else {
        auto sizes = wk::orbit_decomposition(rd, *w, z);
        ojson arr = ojson::array();
        for (const auto& s : sizes) arr.push_back(to_ll(s));
        row["orbit_sizes"] = arr;
        row["spherical_factors"] = sizes.size();
      }
    }
    if (row.contains("spherical_factors"))
      row["spherical_factors_note"] = "conditional on Conjecture 3.3.3";
    out["cases"].push_back(row);
  }
  emit(out);
  return 0;
}

int cmd_verify334(const std::string& type, int rank, int m, long long k, uint64_t seed) {
  wk::RootDatum rd = make_datum(type, rank);
  auto rep = wk::verify_334(rd, {k, m}, seed);
  ojson out;
  out["label"] = rd.label();
  out["m"] = m;
  out["k"] = k;
  out["verified"] = rep.verified;
  out["holds"] = rep.holds;
  out["detail"] = rep.detail;
  emit(out);
  return rep.verified && rep.holds ? 0 : 1;
}

int cmd_clans(const std::string& type, int rank, long long k, int m, int radius) {
  wk::RootDatum rd = make_datum(type, rank);
  wk::Slope s{k, m};
  wk::ClanTable t = wk::enumerate_clans(rd, s, radius);
  ojson out;
  out["label"] = rd.label();
  out["k"] = k;
  out["m"] = m;
  out["radius"] = radius;
  out["n_c"] = wk::delta_c_plus(rd, s).size();
  out["weight_set_size"] = t.dc.size();
  out["chamber_alcoves"] = t.wc_alcoves.size();
  out["clans"] = ojson::array();
  for (size_t ci = 0; ci < t.clans.size(); ++ci) {
    const auto& c = t.clans[ci];
    ojson row;
    row["index"] = ci;
    row["bounded"] = c.bounded;
    row["size"] = c.members.size();
    row["sign_vector"] = c.sign_vector;
    row["members"] = c.members;
    out["clans"].push_back(row);
  }
  emit(out);
  return 0;
}

int cmd_chi(const std::string& type, int rank, long long k, int m, int radius, uint64_t seed) {
  wk::RootDatum rd = make_datum(type, rank);
  wk::Slope s{k, m};
  wk::ClanTable t = wk::enumerate_clans(rd, s, radius);
  size_t n_c = wk::delta_c_plus(rd, s).size();
  wk::Int total = 0;
  bool frontier_clear = true;
  ojson rows = ojson::array();
  for (size_t ci = 0; ci < t.clans.size(); ++ci) {
    const auto& c = t.clans[ci];
    const wk::Alcove& rep = t.wc_alcoves[c.member_idx[0]];
    wk::Int per = 0;
    if (wk::frak_d_cw(rd, s, rep).size() <= n_c) per = wk::chi_fiber(rd, s, rep, seed);
    wk::Int subtotal = per * wk::Int((long long)c.members.size());
    total += subtotal;
    if (per != 0)
      for (size_t idx : c.member_idx)
        if ((int)t.wc_alcoves[idx].word.size() == radius) frontier_clear = false;
    ojson row;
    row["index"] = ci;
    row["bounded"] = c.bounded;
    row["size"] = c.members.size();
    row["chi_per_alcove"] = to_ll(per);
    row["subtotal"] = to_ll(subtotal);
    rows.push_back(row);
  }
  ojson out;
  out["label"] = rd.label();
  out["k"] = k;
  out["m"] = m;
  out["radius"] = radius;
  out["total"] = to_ll(total);
  out["frontier_clear"] = frontier_clear;
  out["clans"] = rows;
  emit(out);
  return 0;
}

int cmd_checkmod(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "checkmod: cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  wk::ModuleData mod;
  try {
    mod = wk::module_from_json(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "checkmod: malformed module file: " << e.what() << "\n";
    return 2;
  }
  wk::RootDatum rd(mod.type, mod.rank);
  auto rep = wk::verify_module(wk::affine_presentation(rd), mod);
  ojson out;
  out["name"] = mod.name;
  out["label"] = rd.label();
  out["dim"] = mod.dim;
  out["pass"] = rep.pass;
  if (!rep.pass) out["failed"] = rep.failed;
  emit(out);
  return rep.pass ? 0 : 1;
}

int cmd_selftest(bool deep, uint64_t seed, const std::string& data_dir) {
  wk::SelftestOptions opt;
  opt.deep = deep;
  opt.seed = seed;
  opt.data_dir = data_dir;
  opt.on_result = [](const wk::CriterionResult& r) {
    std::fprintf(stderr, "criterion %2d/%d %-34s %s (%.1fs)\n", r.id, wk::num_criteria(),
                 r.name.c_str(), r.pass ? "pass" : "FAIL", r.seconds);
  };
  auto results = wk::run_selftest(opt);
  bool all = true;
  ojson rows = ojson::array();
  for (const auto& r : results) {
    all = all && r.pass;
    ojson row;
    row["id"] = r.id;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    row["seconds"] = r.seconds;
    rows.push_back(row);
  }
  ojson out;
  out["pass"] = all;
  out["deep"] = deep;
  out["criteria"] = rows;
  emit(out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylkit: exact arithmetic for affine root-system combinatorics"};
  app.require_subcommand(1);

  std::string type;
  int rank = 0, m = 0, radius = 5;
  long long k = 1;
  uint64_t seed = 12345;
  bool deep = false;
  std::string file, data_dir;

  auto* classify = app.add_subcommand("classify", "regular spectrum and torsion tables");
  classify->add_option("type", type, "root-system family letter")->required();
  classify->add_option("rank", rank, "rank")->required();
  classify->add_flag("--deep", deep, "compute the largest centralizer classes");

  auto* v334 = app.add_subcommand("verify334", "check the fixed-point count identity");
  v334->add_option("type", type)->required();
  v334->add_option("rank", rank)->required();
  v334->add_option("m", m, "slope denominator")->required()->check(CLI::PositiveNumber);
  v334->add_option("k", k, "slope numerator")->required();
  v334->add_option("--seed", seed, "sample-point seed")->capture_default_str();

  auto* clans = app.add_subcommand("clans", "partition chamber alcoves into clans");
  clans->add_option("type", type)->required();
  clans->add_option("rank", rank)->required();
  clans->add_option("k", k, "slope numerator")->required();
  clans->add_option("m", m, "slope denominator")->required()->check(CLI::PositiveNumber);
  clans->add_option("--radius", radius, "word-length radius")->capture_default_str();

  auto* chi = app.add_subcommand("chi", "per-clan fixed-point contributions and total");
  chi->add_option("type", type)->required();
  chi->add_option("rank", rank)->required();
  chi->add_option("k", k, "slope numerator")->required();
  chi->add_option("m", m, "slope denominator")->required()->check(CLI::PositiveNumber);
  chi->add_option("--radius", radius, "word-length radius")->capture_default_str();
  chi->add_option("--seed", seed, "sample-point seed")->capture_default_str();

  auto* checkmod = app.add_subcommand("checkmod", "verify a module file against the relations");
  checkmod->add_option("file", file, "module JSON file")->required();

  auto* selftest = app.add_subcommand("selftest", "run the full golden suite");
  selftest->add_flag("--deep", deep, "include the largest centralizer classes");
  selftest->add_option("--seed", seed, "sample-point seed")->capture_default_str();
  selftest->add_option("--data", data_dir, "directory holding golden.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(type, rank, deep);
    if (app.got_subcommand(v334)) return cmd_verify334(type, rank, m, k, seed);
    if (app.got_subcommand(clans)) return cmd_clans(type, rank, k, m, radius);
    if (app.got_subcommand(chi)) return cmd_chi(type, rank, k, m, radius, seed);
    if (app.got_subcommand(checkmod)) return cmd_checkmod(file);
    if (app.got_subcommand(selftest)) return cmd_selftest(deep, seed, data_dir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
