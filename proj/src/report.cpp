#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "flagpar/scenario.hpp"
#include "json.hpp"

namespace flagpar {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> order{"validate", "semiclosed", "taut",  "stabilizer", "solvable", "traceless",
                                              "levi",     "chevalley",  "real",  "man",        "dagger",   "induce"};
  return order;
}

bool Report::all_hold() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.verdict; });
}

void run_check(Report& r, const std::string& name, const std::string& anchor, std::size_t level,
               const std::function<std::pair<bool, std::string>()>& fn) {
  CheckRecord rec{name, anchor, level, false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, witness] = fn();
    rec.verdict = ok;
    rec.witness = witness;
  } catch (const std::exception& ex) {
    rec.verdict = false;
    rec.witness = std::string("error: ") + ex.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.records.push_back(std::move(rec));
}

std::string emit_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.records) {
    out << (c.verdict ? "PASS " : "FAIL ") << c.name << " level=" << c.level << " [" << c.anchor << "]";
    if (!c.witness.empty()) out << " " << c.witness;
    out << " (" << std::fixed << std::setprecision(3) << c.seconds << "s)\n";
  }
  out << (r.all_hold() ? "all checks hold" : "some checks fail") << " (" << r.records.size() << " records)\n";
  return out.str();
}

std::string emit_record(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.records) {
    nlohmann::ordered_json j;
    j["source"] = r.source;
    j["check"] = c.name;
    j["anchor"] = c.anchor;
    j["level"] = c.level;
    j["verdict"] = c.verdict ? "holds" : "fails";
    j["witness"] = c.witness;
    j["seconds"] = c.seconds;
    out << j.dump() << "\n";
  }
  return out.str();
}

namespace {

std::string join_dims(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string failed(const Certificate& c) {
  std::string s;
  for (const auto& [k, ok] : c)
    if (!ok) s += (s.empty() ? "failed: " : ", ") + k;
  return s;
}

}  // namespace

Report run_scenario(const Scenario& s) {
  Report r;
  r.source = s.name.empty() ? "scenario" : s.name;
  const DualSystem& sys = s.system;
  std::optional<ParabolicDesc> p;
  try {
    p = s.parabolic();
  } catch (const std::exception& ex) {
    run_check(r, "build", "normalizer of the flag data", 0, [&]() -> std::pair<bool, std::string> {
      return {false, std::string("error: ") + ex.what()};
    });
    return r;
  }
  auto has = [&](const std::string& c) { return std::find(s.checks.begin(), s.checks.end(), c) != s.checks.end(); };
  std::optional<RealParabolic> rp;
  std::string rp_error;
  if (!s.real_form.empty()) {
    try {
      rp = real_parabolic(*p, make_real_form(s.real_form_name()));
    } catch (const std::exception& ex) {
      rp_error = ex.what();
    }
  }
  auto need_real = [&]() -> const RealParabolic& {
    if (s.real_form.empty()) throw Error("the scenario names no real form");
    if (!rp) throw Error(rp_error);
    return *rp;
  };
  for (const auto& check : s.checks) {
    for (std::size_t n : s.levels) {
      if (check == "validate") {
        run_check(r, check, "generalized flag: every index lies in one IPS gap", n, [&]() -> std::pair<bool, std::string> {
          Window w = level_window(*p, n);
          for (const auto& f : p->flags()) {
            auto v = validate_genflag(sys, f, w);
            if (!v.valid) return {false, v.message};
          }
          return {true, ""};
        });
      } else if (check == "semiclosed") {
        run_check(r, check, "non-closed members pair with their closure", n, [&]() -> std::pair<bool, std::string> {
          Window w = level_window(*p, n);
          for (const auto& f : p->flags()) {
            auto v = is_semiclosed(sys, f, w);
            if (!v.holds) return {false, v.message};
          }
          return {true, ""};
        });
      } else if (check == "taut") {
        run_check(r, check, "annihilators invariant under the stabilizers", n, [&]() -> std::pair<bool, std::string> {
          if (p->self_taut()) {
            auto v = is_selftaut(sys, std::get<SelfTautFlag>(p->couple).flag, n);
            return {v.verdict.holds, v.verdict.detail};
          }
          TautCouple c = std::get<TautCouple>(p->couple);
          auto v = is_taut_couple(sys, c, n, p->ambient);
          return {v.holds, v.detail};
        });
      } else if (check == "stabilizer") {
        run_check(r, check, "truncated stabilizer is a subalgebra", n, [&]() -> std::pair<bool, std::string> {
          Window w = level_window(*p, n);
          auto t = stabilizer_truncation(*p, w);
          return {is_closed_under_bracket(sys, w, t), "dim=" + std::to_string(t.dim()) + " window=" + std::to_string(w.size())};
        });
      } else if (check == "solvable") {
        run_check(r, check, "truncation is solvable", n, [&]() -> std::pair<bool, std::string> {
          auto v = is_locally_solvable(*p, n);
          return {v.solvable, "derived dims " + join_dims(v.derived_dims)};
        });
      } else if (check == "traceless") {
        run_check(r, check, "generators have trace zero", n, [&]() -> std::pair<bool, std::string> {
          Window w = level_window(*p, n);
          auto t = stabilizer_truncation(*p, w);
          for (const auto& b : t.basis()) {
            FinOp op = from_coefficients(b, w);
            if (trace(sys, op) != 0) return {false, "generator " + to_string(op)};
          }
          return {true, "generators " + std::to_string(t.dim())};
        });
      } else if (check == "levi") {
        run_check(r, check, "Levi blocks satisfy pairing and isotropy", n, [&]() -> std::pair<bool, std::string> {
          LeviDatum l = levi_of(*p);
          check_levi_datum(l, level_window(*p, n));
          return {true, to_string(l)};
        });
      } else if (check == "chevalley") {
        run_check(r, check, "p = p_nil + (l + t) on the window", n, [&]() -> std::pair<bool, std::string> {
          auto c = verify_chevalley(chevalley_truncation(*p, level_window(*p, n)));
          return {c.ok, c.failure};
        });
      } else if (check == "real") {
        run_check(r, check, "tau-stable real parabolic and its real Levi blocks", n, [&]() -> std::pair<bool, std::string> {
          const RealParabolic& q = need_real();
          std::string labels;
          for (const auto& b : real_levi(q, n)) labels += (labels.empty() ? "" : " ") + b.label + (b.compact ? "(c)" : "");
          return {true, labels};
        });
      } else if (check == "man") {
        run_check(r, check, "p = m + a + n certificate and restricted roots", n, [&]() -> std::pair<bool, std::string> {
          const RealParabolic& q = need_real();
          Window w = real_level_window(q, n);
          ManDecomp md = man_decompose(q, w);
          RootOracle o = restricted_root_oracle(q.form, w, md.a);
          bool ok = all_pass(md.certificate) && o.dim_m == md.m.dim() && o.dim_n == md.n.dim();
          std::string dims = "m=" + std::to_string(md.m.dim()) + " a=" + std::to_string(md.a.dim()) + " n=" +
                             std::to_string(md.n.dim()) + " oracle m=" + std::to_string(o.dim_m) +
                             " n=" + std::to_string(o.dim_n);
          std::string f = failed(md.certificate);
          return {ok, f.empty() ? dims : dims + " " + f};
        });
      } else if (check == "dagger") {
        run_check(r, check, "p-dagger keeps m and a", n, [&]() -> std::pair<bool, std::string> {
          DaggerResult d = construct_dagger(need_real(), n);
          std::string f = failed(d.certificate);
          return {all_pass(d.certificate), std::string(d.fixed_point ? "fixed point" : "moved") + (f.empty() ? "" : " " + f)};
        });
      } else if (check == "induce") {
        run_check(r, check, "induced module respects brackets", n, [&]() -> std::pair<bool, std::string> {
          const RealParabolic& q = need_real();
          Window w = real_level_window(q, n);
          ManDecomp md = man_decompose(q, w);
          CharacterSpec spec{s.sigma, std::nullopt};
          if (spec.sigma.empty()) spec.sigma.assign(md.a.dim(), Rational(0));
          InducedModule mod = induced_module(q, w, spec, s.degree);
          return {check_bracket_fidelity(mod), "graded dims " + join_dims(mod.graded_dims())};
        });
      }
    }
  }
  return r;
}

}  // namespace flagpar
