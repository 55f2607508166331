#include "satake/characters.hpp"
#include "satake/config.hpp"
#include "satake/format.hpp"
#include "satake/hecke.hpp"
#include "satake/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace satake;

HeisenbergElement parse_element(const std::string& text, int rank) {
  // a;lam;mu;k with lam and mu comma-separated
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw config_error("element must be a;lam;mu;k, got \"" + text + "\"");
  HeisenbergElement g{Int(parts[0]), parse_int_list(parts[1]), parse_int_list(parts[2]),
                      Int(parts[3])};
  if (static_cast<int>(g.lam.size()) != rank || static_cast<int>(g.mu.size()) != rank)
    throw config_error("element coordinates do not match lattice rank");
  return g;
}

DoubleCosetLabel parse_label(const std::string& text, int rank) {
  // k,a,mu1,...,mur
  LatticeVector all = parse_int_list(text);
  if (static_cast<int>(all.size()) != 2 + rank)
    throw config_error("label must be k,a,mu (rank " + std::to_string(rank) + "), got \"" +
                       text + "\"");
  DoubleCosetLabel label;
  label.k = all[0];
  label.a = all[1];
  label.mu_bar.assign(all.begin() + 2, all.end());
  return label;
}

Int default_trunc(const WorkbenchConfig& cfg) {
  if (const char* env = std::getenv("SATAKE_TRUNC")) return Int(std::string(env));
  return cfg.default_trunc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for torus Hecke algebras and affine characters"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (defaults to rank-1 torus)");

  std::string trunc_opt, window_opt, level_opt = "1", weight_opt, seed_opt = "7";
  int cases = 100;
  std::vector<std::string> elements, deltas;

  auto* group = app.add_subcommand("group", "Heisenberg group arithmetic");
  auto* group_mul = group->add_subcommand("mul", "multiply elements left to right");
  group_mul->add_option("--element", elements, "a;lam;mu;k")->required()->expected(-2);
  auto* group_inv = group->add_subcommand("inv", "invert an element");
  group_inv->add_option("--element", elements, "a;lam;mu;k")->required();
  auto* group_nf = group->add_subcommand("nf", "left and double-coset normal forms");
  group_nf->add_option("--element", elements, "a;lam;mu;k")->required();

  auto* hecke = app.add_subcommand("hecke", "torus Hecke algebra");
  auto* hecke_delta = hecke->add_subcommand("delta", "print a basis element");
  hecke_delta->add_option("--delta", deltas, "k,a,mu")->required();
  hecke_delta->add_option("--trunc", trunc_opt, "certified v-degree");
  auto* hecke_mul = hecke->add_subcommand("mul", "convolve via theta series");
  hecke_mul->add_option("--delta", deltas, "k,a,mu")->required()->expected(-2);
  hecke_mul->add_option("--trunc", trunc_opt, "certified v-degree");
  auto* hecke_oracle = hecke->add_subcommand("mul-oracle", "convolve by coset counting");
  hecke_oracle->add_option("--delta", deltas, "k,a,mu")->required()->expected(-2);
  hecke_oracle->add_option("--window", window_opt, "oracle degree window");
  hecke_oracle->add_option("--trunc", trunc_opt, "certified v-degree of the operands");
  auto* hecke_theta = hecke->add_subcommand("theta", "theta series of an element");
  hecke_theta->add_option("--delta", deltas, "k,a,mu")->required();
  hecke_theta->add_option("--trunc", trunc_opt, "certified v-degree");

  auto* weyl = app.add_subcommand("weyl", "affine Weyl group");
  auto* weyl_reduce = weyl->add_subcommand("reduce", "reduce a weight to the alcove");
  weyl_reduce->add_option("--level", level_opt, "level k");
  weyl_reduce->add_option("--weight", weight_opt, "comma-separated coordinates")->required();
  auto* weyl_doms = weyl->add_subcommand("dominants", "list level-k dominant weights");
  weyl_doms->add_option("--level", level_opt, "level k");

  auto* chr = app.add_subcommand("char", "character ring");
  auto* chr_orbit = chr->add_subcommand("orbit-sum", "orbit-sum basis element");
  chr_orbit->add_option("--weight", weight_opt, "k,n,lam1,...")->required();
  chr_orbit->add_option("--trunc", trunc_opt, "certified v-degree");
  auto* chr_irr = chr->add_subcommand("irr", "irreducible character (Weyl-Kac)");
  chr_irr->add_option("--weight", weight_opt, "k,n,lam1,...")->required();
  chr_irr->add_option("--trunc", trunc_opt, "certified v-degree");
  auto* chr_fr = chr->add_subcommand("freudenthal", "irreducible character (recursion)");
  chr_fr->add_option("--weight", weight_opt, "k,n,lam1,...")->required();
  chr_fr->add_option("--trunc", trunc_opt, "certified v-degree");
  auto* chr_expand = chr->add_subcommand("expand", "expand a character in orbit sums");
  chr_expand->add_option("--weight", weight_opt, "k,n,lam1,...")->required();
  chr_expand->add_option("--trunc", trunc_opt, "certified v-degree");

  auto* verify = app.add_subcommand("verify", "property suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "all|group|hecke|weyl|char");
  verify->add_option("--seed", seed_opt, "RNG seed");
  verify->add_option("--cases", cases, "cases per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    WorkbenchConfig cfg;
    if (config_path.empty()) {
      cfg = config_from_json_text(R"({"lattice":{"rank":1,"b":[[-1]]}})");
    } else {
      cfg = load_config(config_path);
    }
    int rank = cfg.q.rank();
    Int N = trunc_opt.empty() ? default_trunc(cfg) : Int(trunc_opt);

    auto parse_weight = [&](const std::string& text) {
      LatticeVector all = parse_int_list(text);
      if (static_cast<int>(all.size()) != 2 + rank)
        throw config_error("weight must be k,n,lam (rank " + std::to_string(rank) + ")");
      AffineWeight w;
      w.k = all[0];
      w.n = all[1];
      w.lam.assign(all.begin() + 2, all.end());
      return w;
    };

    if (group_mul->parsed()) {
      HeisenbergElement acc = parse_element(elements[0], rank);
      for (size_t i = 1; i < elements.size(); ++i)
        acc = multiply(cfg.b, acc, parse_element(elements[i], rank));
      std::cout << format_heisenberg(acc) << "\n";
    } else if (group_inv->parsed()) {
      std::cout << format_heisenberg(inverse(cfg.b, parse_element(elements[0], rank))) << "\n";
    } else if (group_nf->parsed()) {
      HeisenbergElement g = parse_element(elements[0], rank);
      LeftNormalForm f = left_normal_form(cfg.b, g);
      std::cout << "left coset rep: " << format_heisenberg(f.rep) << "\n";
      std::cout << "double coset: " << format_label(double_coset_normal_form(cfg.b, cfg.q, g))
                << "\n";
    } else if (hecke_delta->parsed()) {
      std::cout << format_hecke(delta(parse_label(deltas[0], rank), N)) << "\n";
    } else if (hecke_mul->parsed()) {
      HeckeElement acc = delta(parse_label(deltas[0], rank), N);
      for (size_t i = 1; i < deltas.size(); ++i)
        acc = convolve(cfg.q, acc, delta(parse_label(deltas[i], rank), N));
      std::cout << format_hecke(acc) << "\n";
    } else if (hecke_oracle->parsed()) {
      Int W = window_opt.empty() ? N : Int(window_opt);
      HeckeElement acc = delta(parse_label(deltas[0], rank), W + 1);
      for (size_t i = 1; i < deltas.size(); ++i)
        acc = convolve_oracle(cfg.q, acc, delta(parse_label(deltas[i], rank), W + 1), W);
      std::cout << format_hecke(acc) << "\n";
    } else if (hecke_theta->parsed()) {
      std::cout << format_series(to_theta_series(cfg.q, delta(parse_label(deltas[0], rank), N)))
                << "\n";
    } else if (weyl_reduce->parsed()) {
      LatticeVector lam = parse_int_list(weight_opt);
      if (static_cast<int>(lam.size()) != rank)
        throw config_error("weight coordinates do not match lattice rank");
      Reduction r = reduce_to_dominant(cfg.rd, lam, Int(level_opt));
      std::cout << format_vector(r.rep) << ", word:";
      if (r.transcript.empty()) std::cout << " (none)";
      for (const auto& s : r.transcript) std::cout << " " << s;
      std::cout << "\n";
    } else if (weyl_doms->parsed()) {
      for (const auto& lam : enumerate_level_k_dominants(cfg.rd, Int(level_opt)))
        std::cout << format_vector(lam) << "\n";
    } else if (chr_orbit->parsed()) {
      std::cout << format_series(orbit_sum(cfg.rd, parse_weight(weight_opt), N)) << "\n";
    } else if (chr_irr->parsed()) {
      std::cout << format_series(weyl_kac_character(cfg.rd, parse_weight(weight_opt), N))
                << "\n";
    } else if (chr_fr->parsed()) {
      std::cout << format_series(freudenthal_character(cfg.rd, parse_weight(weight_opt), N))
                << "\n";
    } else if (chr_expand->parsed()) {
      GradedSeries s = weyl_kac_character(cfg.rd, parse_weight(weight_opt), N);
      for (const auto& [w, c] : expand_in_orbit_sums(cfg.rd, s))
        std::cout << format_weight(w) << ": " << rat_str(c) << "\n";
    } else if (verify->parsed()) {
      std::uint64_t seed = std::stoull(seed_opt);
      VerifyReport report;
      if (suite == "all")
        report = verify_all(cfg, seed, cases);
      else if (suite == "group")
        report = verify_group(cfg, seed, cases);
      else if (suite == "hecke")
        report = verify_hecke(cfg, seed, cases);
      else if (suite == "weyl")
        report = verify_weyl(seed, cases);
      else if (suite == "char")
        report = verify_char(seed, cases);
      else
        throw config_error("unknown suite \"" + suite + "\"");
      std::cout << report.text;
      std::cout << (report.ok() ? "OK" : "FAILED") << " (" << report.passed << " passed, "
                << report.failed << " failed)\n";
      return report.ok() ? 0 : 1;
    }
    return 0;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
