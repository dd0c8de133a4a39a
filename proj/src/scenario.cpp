#include "flagpar/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "flagpar/sexpr.hpp"

namespace flagpar {

namespace {

const Sexp& atom_at(const Sexp& e, std::size_t k) {
  if (k >= e.items.size() || !e.items[k].is_atom) sexp_error(e, "expected an atom in position " + std::to_string(k));
  return e.items[k];
}

std::int64_t to_int(const Sexp& a) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(a.atom, &used);
    if (used != a.atom.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    sexp_error(a, "expected an integer");
  }
}

std::optional<std::int64_t> to_count(const Sexp& a) {
  if (a.atom == "inf") return std::nullopt;
  return to_int(a);
}

Rational to_rational(const Sexp& a) {
  try {
    return parse_rational(a.atom);
  } catch (const std::exception&) {
    sexp_error(a, "expected a rational number");
  }
}

std::string count_text(const std::optional<std::int64_t>& c) { return c ? std::to_string(*c) : "inf"; }

Direction parse_direction(const Sexp& e, std::size_t k) {
  if (k >= e.items.size()) return Direction::Ascending;
  const std::string& d = atom_at(e, k).atom;
  if (d == "ascending") return Direction::Ascending;
  if (d == "descending") return Direction::Descending;
  sexp_error(e.items[k], "direction must be ascending or descending");
}

DualSystem parse_system(const Sexp& e) {
  IndexDomain domain = IndexDomain::Nat;
  Kernel kernel = Kernel::Delta;
  FormKind form = FormKind::None;
  std::optional<std::int64_t> pairs, dim;
  for (std::size_t k = 1; k < e.items.size(); ++k) {
    const Sexp& f = e.items[k];
    if (!f.is_list() || f.items.size() != 2) sexp_error(f, "expected (<field> <value>)");
    const std::string& v = atom_at(f, 1).atom;
    if (f.head_is("domain")) {
      try {
        domain = parse_domain(v);
      } catch (const Error& ex) {
        sexp_error(f.items[1], ex.what());
      }
    } else if (f.head_is("kernel")) {
      if (v == "delta") kernel = Kernel::Delta;
      else if (v == "order-step") kernel = Kernel::OrderStep;
      else sexp_error(f.items[1], "kernel must be delta or order-step");
    } else if (f.head_is("form")) {
      if (v == "symmetric") form = FormKind::Symmetric;
      else if (v == "alternating") form = FormKind::Alternating;
      else if (v != "none") sexp_error(f.items[1], "form must be none, symmetric or alternating");
    } else if (f.head_is("pairs")) {
      pairs = to_count(f.items[1]);
    } else if (f.head_is("dimension")) {
      dim = to_int(f.items[1]);
    } else {
      sexp_error(f, "unknown system field");
    }
  }
  try {
    if (form == FormKind::Symmetric) return DualSystem::symmetric(pairs, dim);
    if (form == FormKind::Alternating) return DualSystem::alternating(pairs, dim);
    if (kernel == Kernel::OrderStep) return DualSystem::order_step(domain);
    return DualSystem::delta(domain, dim);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& ex) {
    sexp_error(e, ex.what());
  }
}

FlagSpec parse_flag(const Sexp& e, IndexDomain d) {
  FlagSpec f;
  for (std::size_t k = 1; k < e.items.size(); ++k) {
    const Sexp& x = e.items[k];
    if (x.head_is("side")) {
      const std::string& s = atom_at(x, 1).atom;
      if (s != "v" && s != "w") sexp_error(x, "side must be v or w");
      f.side = s == "v" ? Side::V : Side::W;
    } else if (x.head_is("schema")) {
      const std::string& s = atom_at(x, 1).atom;
      if (s == "chain") f.schema = Schema::FiniteChain;
      else if (s == "column") f.schema = Schema::ColumnSchema;
      else if (s == "rational") f.schema = Schema::RationalCut;
      else sexp_error(x.items[1], "schema must be chain, column or rational");
      f.dir = parse_direction(x, 2);
    } else if (x.head_is("members")) {
      for (std::size_t m = 1; m < x.items.size(); ++m) f.members.push_back(parse_cutset(x.items[m], d));
    } else {
      sexp_error(x, "unknown flag field");
    }
  }
  if (f.schema != Schema::FiniteChain && !f.members.empty()) sexp_error(e, "members belong to chain flags only");
  return f;
}

std::string schema_text(const FlagSpec& f) {
  switch (f.schema) {
    case Schema::ColumnSchema:
      return "column";
    case Schema::RationalCut:
      return "rational";
    default:
      return "chain";
  }
}

std::string print_flag(const FlagSpec& f) {
  std::string out = "(flag (side ";
  out += f.side == Side::V ? "v" : "w";
  out += ") (schema " + schema_text(f);
  if (f.schema != Schema::FiniteChain) out += f.dir == Direction::Ascending ? " ascending" : " descending";
  out += ")";
  if (!f.members.empty()) {
    out += " (members";
    for (const auto& m : f.members) out += " " + to_string(m);
    out += ")";
  }
  return out + ")";
}

}  // namespace

GenFlag FlagSpec::build(const DualSystem& sys) const {
  switch (schema) {
    case Schema::ColumnSchema:
      return GenFlag::column_schema(side, dir);
    case Schema::RationalCut:
      return GenFlag::rational_cut(side, dir);
    default:
      break;
  }
  std::vector<CutSet> all = members;
  if (sys.has_form()) {
    for (const auto& m : members) {
      CutSet a = annihilator(sys, side, m);
      if (std::find(all.begin(), all.end(), a) == all.end()) all.push_back(a);
    }
  }
  return GenFlag::finite_chain(side, sys, all);
}

std::string Scenario::real_form_name() const {
  if (real_form.empty()) return "";
  std::string out = real_form[0] + "(";
  for (std::size_t k = 1; k < real_form.size(); ++k) out += (k > 1 ? "," : "") + real_form[k];
  return out + ")";
}

ParabolicDesc Scenario::parabolic() const {
  GenFlag fv = v.build(system);
  if (system.has_form()) {
    if (w) throw Error("a form-equipped scenario takes a single self-taut flag");
    return make_selftaut_parabolic(system, fv, ambient, trace_rows);
  }
  if (!w) return normalizer_of(system, fv, trace_rows);
  return make_parabolic(system, TautCouple{fv, w->build(system), std::nullopt}, trace_rows);
}

Scenario parse_scenario(const std::string& text) {
  std::vector<Sexp> top = parse_sexps(text);
  if (top.size() != 1) throw ParseError("expected exactly one (flagpar-scenario ...) form", 1, 1);
  const Sexp& e = top[0];
  if (!e.head_is("flagpar-scenario") || e.items.size() < 2) sexp_error(e, "expected (flagpar-scenario <version> ...)");
  Scenario s;
  s.version = static_cast<int>(to_int(atom_at(e, 1)));
  if (s.version != 1) sexp_error(e.items[1], "unsupported scenario version");
  const Sexp* system = nullptr;
  std::vector<const Sexp*> flags;
  for (std::size_t k = 2; k < e.items.size(); ++k) {
    const Sexp& f = e.items[k];
    if (!f.is_list() || f.items.empty() || !f.items[0].is_atom) sexp_error(f, "expected (<field> ...)");
    const std::string& h = f.items[0].atom;
    if (h == "name") {
      s.name = atom_at(f, 1).atom;
    } else if (h == "system") {
      system = &f;
    } else if (h == "flag") {
      flags.push_back(&f);
    } else if (h == "ambient") {
      const std::string& a = atom_at(f, 1).atom;
      if (a == "gl") s.ambient = Ambient::GL;
      else if (a == "so") s.ambient = Ambient::SO;
      else if (a == "sp") s.ambient = Ambient::SP;
      else sexp_error(f.items[1], "ambient must be gl, so or sp");
    } else if (h == "real-form") {
      for (std::size_t m = 1; m < f.items.size(); ++m) s.real_form.push_back(atom_at(f, m).atom);
      if (s.real_form.empty()) sexp_error(f, "real-form needs a kind");
    } else if (h == "trace-row") {
      TraceRow row;
      for (std::size_t m = 1; m < f.items.size(); ++m) {
        const Sexp& t = f.items[m];
        if (!t.is_list() || t.items.size() != 2) sexp_error(t, "expected (<block-id> <coefficient>)");
        row[atom_at(t, 0).atom] = to_rational(atom_at(t, 1));
      }
      s.trace_rows.push_back(row);
    } else if (h == "checks") {
      for (std::size_t m = 1; m < f.items.size(); ++m) {
        const std::string& c = atom_at(f, m).atom;
        const auto& known = known_checks();
        if (std::find(known.begin(), known.end(), c) == known.end()) sexp_error(f.items[m], "unknown check");
        s.checks.push_back(c);
      }
    } else if (h == "levels") {
      for (std::size_t m = 1; m < f.items.size(); ++m) {
        std::int64_t n = to_int(atom_at(f, m));
        if (n < 1) sexp_error(f.items[m], "levels are positive");
        s.levels.push_back(static_cast<std::size_t>(n));
      }
    } else if (h == "sigma") {
      for (std::size_t m = 1; m < f.items.size(); ++m) s.sigma.push_back(to_rational(atom_at(f, m)));
    } else if (h == "degree") {
      std::int64_t d = to_int(atom_at(f, 1));
      if (d < 0) sexp_error(f.items[1], "degree is nonnegative");
      s.degree = static_cast<std::size_t>(d);
    } else {
      sexp_error(f, "unknown scenario field '" + h + "'");
    }
  }
  if (system) {
    s.system = parse_system(*system);
  } else if (!s.real_form.empty()) {
    try {
      s.system = make_real_form(s.real_form_name()).system;
    } catch (const Error& ex) {
      sexp_error(e, ex.what());
    }
  } else {
    sexp_error(e, "missing (system ...)");
  }
  if (flags.empty() || flags.size() > 2) sexp_error(e, "expected one flag on side v and optionally one on side w");
  bool have_v = false;
  for (const Sexp* f : flags) {
    FlagSpec spec = parse_flag(*f, s.system.domain);
    if (spec.side == Side::V) {
      if (have_v) sexp_error(*f, "two flags on side v");
      s.v = spec;
      have_v = true;
    } else {
      if (s.w) sexp_error(*f, "two flags on side w");
      s.w = spec;
    }
  }
  if (!have_v) sexp_error(e, "missing the flag on side v");
  if (s.levels.empty()) s.levels = {1, 2, 3};
  // the order of the run, not the order written
  std::vector<std::string> ordered;
  for (const auto& c : known_checks())
    if (std::find(s.checks.begin(), s.checks.end(), c) != s.checks.end()) ordered.push_back(c);
  s.checks = ordered;
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string print_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "(flagpar-scenario " << s.version << "\n";
  if (!s.name.empty()) out << "  (name " << s.name << ")\n";
  const DualSystem& y = s.system;
  if (s.real_form.empty() || !(make_real_form(s.real_form_name()).system == y)) {
    out << "  (system (domain " << to_string(y.domain) << ") (kernel " << to_string(y.kernel) << ")";
    if (y.has_form()) out << " (form " << to_string(y.form) << ") (pairs " << count_text(y.pairs) << ")";
    if (y.dimension) out << " (dimension " << *y.dimension << ")";
    out << ")\n";
  }
  out << "  " << print_flag(s.v) << "\n";
  if (s.w) out << "  " << print_flag(*s.w) << "\n";
  out << "  (ambient " << to_string(s.ambient) << ")\n";
  if (!s.real_form.empty()) {
    out << "  (real-form";
    for (const auto& p : s.real_form) out << " " << p;
    out << ")\n";
  }
  for (const auto& row : s.trace_rows) {
    out << "  (trace-row";
    for (const auto& [id, c] : row) out << " (" << id << " " << to_string(c) << ")";
    out << ")\n";
  }
  out << "  (checks";
  for (const auto& c : s.checks) out << " " << c;
  out << ")\n  (levels";
  for (auto n : s.levels) out << " " << n;
  out << ")\n";
  if (!s.sigma.empty()) {
    out << "  (sigma";
    for (const auto& q : s.sigma) out << " " << to_string(q);
    out << ")\n";
  }
  out << "  (degree " << s.degree << "))\n";
  return out.str();
}

}  // namespace flagpar
