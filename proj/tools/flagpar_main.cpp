// flagpar: scenario runner, verification suites and small calculators.
//
// Exit codes: 0 every verdict holds, 1 some check fails, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flagpar/scenario.hpp"
#include "flagpar/suite.hpp"

using namespace flagpar;

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_text(const std::string& arg) {
  if (arg.rfind("matrix", 0) == 0) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot open " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario load(const std::string& path) {
  if (!std::ifstream(path)) throw UsageError("cannot open " + path);
  return load_scenario(path);
}

int finish(const Report& r, const std::string& emit) {
  std::cout << (emit == "record" ? emit_record(r) : emit_text(r));
  return r.all_hold() ? 0 : 1;
}

/// "2..4" or "2,3,4" or "3".
std::vector<std::size_t> parse_levels(const std::string& text) {
  std::vector<std::size_t> out;
  auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      std::size_t a = std::stoul(text.substr(0, dots)), b = std::stoul(text.substr(dots + 2));
      for (std::size_t n = a; n <= b; ++n) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string tok;
      while (std::getline(ss, tok, ',')) out.push_back(std::stoul(tok));
    }
  } catch (const std::exception&) {
    throw UsageError("bad level list '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty level list");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + tok + "'");
    }
  }
  return out;
}

std::string form_name(const std::string& f) {
  if (f == "sl") return "sl(inf;R)";
  if (f == "gl") return "gl(inf;R)";
  return f;
}

/// The parabolic of a scenario read against a real form, or the full flag
/// {1} < {1,2} < ... on the window for the split forms.
RealParabolic real_parabolic_for(const std::string& form, const std::string& scenario, std::size_t window_size) {
  RealStructure rs = make_real_form(form_name(form));
  if (!scenario.empty()) return real_parabolic(load(scenario).parabolic(), rs);
  if (rs.kind != RealKind::Split) throw UsageError("--scenario is needed for " + rs.name);
  std::vector<CutSet> members;
  for (std::size_t k = 1; k < window_size; ++k) members.push_back(CutSet::nat_range(1, static_cast<std::int64_t>(k)));
  return real_parabolic(normalizer_of(rs.system, GenFlag::finite_chain(Side::V, rs.system, members)), rs);
}

void dump_space(const std::string& title, const std::vector<MatQ>& basis) {
  std::cout << title << " dim " << basis.size() << "\n";
  for (const auto& b : basis) std::cout << dump_matrix(b);
}

void dump_space(const std::string& title, const std::vector<MatG>& basis) {
  std::cout << title << " dim " << basis.size() << "\n";
  for (const auto& b : basis) std::cout << dump_matrix(b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagpar: parabolics of the finitary classical Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string emit = "text";
  app.add_option("--emit", emit, "output mode")->check(CLI::IsMember({"text", "record"}));

  std::string scenario, form;
  std::size_t level = 3, degree = 2, window_size = 3, n_minors = 4;
  std::string levels_text = "1..3", sigma_text, b_text, x_text, c_text;

  auto* run = app.add_subcommand("run", "run the checks listed in a scenario");
  run->add_option("--scenario", scenario)->required();

  auto* print = app.add_subcommand("print", "print a scenario in normal form");
  print->add_option("--scenario", scenario)->required();

  auto* stab = app.add_subcommand("stabilizer", "basis of the truncated stabilizer");
  stab->add_option("--scenario", scenario)->required();
  stab->add_option("--level", level);

  bool taut = false, semiclosed = false, solvable = false;
  auto* check = app.add_subcommand("check", "one verdict; exit 0 when it holds");
  check->add_option("--scenario", scenario)->required();
  check->add_option("--level", level);
  auto* g = check->add_option_group("verdict");
  g->add_flag("--taut", taut);
  g->add_flag("--semiclosed", semiclosed);
  g->add_flag("--solvable", solvable);
  g->require_option(1);

  auto* levi = app.add_subcommand("levi", "Levi blocks of the parabolic");
  levi->add_option("--scenario", scenario)->required();

  auto* chev = app.add_subcommand("chevalley", "p_nil, l and t on the level window");
  chev->add_option("--scenario", scenario)->required();
  chev->add_option("--level", level);

  auto* man = app.add_subcommand("man", "m, a, n bases and the certificate");
  man->add_option("--form", form)->required();
  man->add_option("--scenario", scenario);
  man->add_option("--levels", levels_text);

  auto* induce = app.add_subcommand("induce", "action matrices of an induced module");
  induce->add_option("--form", form)->required();
  induce->add_option("--scenario", scenario);
  induce->add_option("--window", window_size);
  induce->add_option("--degree", degree);
  induce->add_option("--sigma", sigma_text);

  auto* psi = app.add_subcommand("psi-b", "det((I - B) + B x)");
  psi->add_option("--b", b_text, "'matrix R C entries...' or a file")->required();
  psi->add_option("--x", x_text)->required();

  auto* voic = app.add_subcommand("voiculescu", "minor test for a character sequence");
  voic->add_option("--c", c_text, "k:c_k,...")->required();
  voic->add_option("--n", n_minors);

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run a verification battery");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      Report r = run_scenario(load(scenario));
      return finish(r, emit);
    }
    if (*print) {
      std::cout << print_scenario(load(scenario));
      return 0;
    }
    if (*suite) return finish(run_suite(suite_name), emit);
    if (*stab) {
      ParabolicDesc p = load(scenario).parabolic();
      Window w = level_window(p, level);
      std::cout << "window";
      for (const auto& i : w.indices) std::cout << " " << to_string(i);
      std::cout << "\n";
      dump_space("stabilizer", stabilizer_truncation(p, w).basis());
      return 0;
    }
    if (*check) {
      Scenario s = load(scenario);
      s.checks = {taut ? "taut" : semiclosed ? "semiclosed" : "solvable"};
      s.levels = {level};
      return finish(run_scenario(s), emit);
    }
    if (*levi) {
      LeviDatum l = levi_of(load(scenario).parabolic());
      std::size_t k = 0;
      for (const auto& b : l.blocks) {
        auto c = b.x.cardinality();
        std::cout << "block " << k++ << " sl order " << (c ? std::to_string(*c) : "inf") << " X " << to_string(b.x)
                  << " Y " << to_string(b.y) << "\n";
      }
      if (l.z) std::cout << "block " << k << " " << (l.ambient == Ambient::SP ? "sp" : "so") << " Z " << to_string(*l.z) << "\n";
      return 0;
    }
    if (*chev) {
      ParabolicDesc p = load(scenario).parabolic();
      ChevalleyData c = chevalley_truncation(p, level_window(p, level));
      dump_space("p_nil", c.p_nil.basis());
      dump_space("l", c.l.basis());
      dump_space("t", c.t.basis());
      ChevalleyCheck v = verify_chevalley(c);
      std::cout << (v.ok ? "PASS" : "FAIL " + v.failure) << "\n";
      return v.ok ? 0 : 1;
    }
    if (*man) {
      Report r;
      r.source = form_name(form);
      for (std::size_t n : parse_levels(levels_text)) {
        RealParabolic rp = real_parabolic_for(form, scenario, n);
        Window w = scenario.empty() ? real_window(rp.form, n) : real_level_window(rp, n);
        ManDecomp md = man_decompose(rp, w);
        if (emit == "text") {
          std::cout << "level " << n << " window " << w.size() << "\n";
          dump_space("m", md.m.basis());
          dump_space("a", md.a.basis());
          dump_space("n", md.n.basis());
        }
        for (const auto& [name, ok] : md.certificate) {
          run_check(r, name, "p = m + a + n", n, [ok = ok]() -> std::pair<bool, std::string> { return {ok, ""}; });
        }
      }
      return finish(r, emit);
    }
    if (*induce) {
      RealParabolic rp = real_parabolic_for(form, scenario, window_size);
      Window w = scenario.empty() ? real_window(rp.form, window_size) : real_level_window(rp, window_size);
      CharacterSpec spec{parse_rationals(sigma_text), std::nullopt};
      InducedModule mod = induced_module(rp, w, spec, degree);
      std::cout << "graded dims";
      for (auto d : mod.graded_dims()) std::cout << " " << d;
      std::cout << "\n";
      for (std::size_t k = 0; k < mod.generators.size(); ++k) {
        std::cout << "generator " << k << "\n" << dump_matrix(mod.generators[k]) << "action\n" << dump_matrix(mod.action[k]);
        std::cout << "overflow columns";
        for (std::size_t c = 0; c < mod.overflow[k].size(); ++c)
          if (mod.overflow[k][c]) std::cout << " " << c;
        std::cout << "\n";
      }
      return 0;
    }
    if (*psi) {
      MatG b = parse_matrix<GaussianQ>(read_text(b_text));
      MatG x = parse_matrix<GaussianQ>(read_text(x_text));
      std::cout << to_string(psi_b(b, x)) << "\n";
      return 0;
    }
    if (*voic) {
      std::map<std::int64_t, Rational> c;
      std::stringstream ss(c_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw UsageError("expected k:c_k, got '" + tok + "'");
        try {
          c[std::stoll(tok.substr(0, colon))] = parse_rational(tok.substr(colon + 1));
        } catch (const std::exception&) {
          throw UsageError("bad entry '" + tok + "'");
        }
      }
      bool ok = voiculescu_check(c, n_minors);
      std::cout << (ok ? "accepted" : "rejected") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const SizeMismatch& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
