#include "flagpar/parabolic.hpp"

#include <algorithm>
#include <functional>

namespace flagpar {

Rational evaluate(const DualSystem& sys, const BlockFunctional& f, const FinOp& op) {
  Rational s = 0;
  for (const auto& [ij, c] : op.coeff())
    if (f.x.contains(ij.first)) s += c * sys.beta(ij.first, ij.second);
  return s;
}

std::vector<GenFlag> ParabolicDesc::flags() const {
  if (const auto* c = std::get_if<TautCouple>(&couple)) return {c->v, c->w};
  const GenFlag& f = std::get<SelfTautFlag>(couple).flag;
  return {f, GenFlag(Side::W, f.schema(), f.coarse(), f.refined())};
}

namespace {

const GenFlag& v_flag(const ParabolicDesc& p) {
  if (const auto* c = std::get_if<TautCouple>(&p.couple)) return c->v;
  return std::get<SelfTautFlag>(p.couple).flag;
}

void check_rows(const ParabolicDesc& p) {
  for (const auto& row : p.trace_rows)
    for (const auto& [id, c] : row) block_by_id(p, id);
}

}  // namespace

ParabolicDesc make_parabolic(DualSystem sys, TautCouple c, std::vector<TraceRow> rows) {
  if (c.v.side() != Side::V || c.w.side() != Side::W) throw Error("a couple pairs a V flag with a W flag");
  if (!c.verified_level) {
    Verdict v = is_taut_couple(sys, c, 3);
    if (!v.holds) throw Error("couple is not taut: " + v.detail);
  }
  ParabolicDesc p{std::move(sys), std::move(c), Ambient::GL, std::move(rows)};
  check_rows(p);
  return p;
}

ParabolicDesc make_selftaut_parabolic(DualSystem sys, GenFlag f, Ambient a, std::vector<TraceRow> rows) {
  SelfTautVerdict v = is_selftaut(sys, f, 4);
  if (!v.verdict.holds) throw Error("flag is not self-taut: " + v.verdict.detail);
  ParabolicDesc p{std::move(sys), SelfTautFlag{std::move(f), v.classes}, a, std::move(rows)};
  check_rows(p);
  return p;
}

ParabolicDesc normalizer_of(const DualSystem& sys, const GenFlag& v, std::vector<TraceRow> rows) {
  return make_parabolic(sys, TautCouple{v, dual_flag(sys, v), std::nullopt}, std::move(rows));
}

// ---------------------------------------------------------------------------

std::vector<BlockFunctional> infinite_trace_functionals(const ParabolicDesc& p, std::int64_t column_bound) {
  const DualSystem& sys = p.system;
  std::vector<BlockFunctional> out{{"total", sys.universe(), sys.universe()}};
  const GenFlag& f = v_flag(p);
  const auto& ch = f.coarse();
  for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
    if (f.gap_direction(k)) continue;
    if (k == 0 && ch.size() == 2) continue;  // the whole space: already "total"
    CutSet d = ch[k + 1].minus(ch[k]);
    auto card = d.cardinality();
    if (card && *card <= 1) continue;
    CutSet y = annihilator(sys, Side::V, ch[k]).minus(annihilator(sys, Side::V, ch[k + 1]));
    out.push_back({"gap" + std::to_string(k), d, y});
  }
  if (f.schema() == Schema::ColumnSchema) {
    for (std::int64_t a = 1; a <= column_bound; ++a)
      out.push_back({"col" + std::to_string(a), CutSet::column(a), CutSet::column(a)});
  }
  return out;
}

BlockFunctional block_by_id(const ParabolicDesc& p, const std::string& id) {
  if (id.rfind("col", 0) == 0 && v_flag(p).schema() == Schema::ColumnSchema) {
    std::int64_t a = 0;
    try {
      a = std::stoll(id.substr(3));
    } catch (const std::exception&) {
      throw Error("unknown block id " + id);
    }
    if (a < 1) throw Error("unknown block id " + id);
    return {id, CutSet::column(a), CutSet::column(a)};
  }
  for (auto& b : infinite_trace_functionals(p, 0))
    if (b.id == id) return b;
  throw Error("unknown block id " + id);
}

// ---------------------------------------------------------------------------

Window extend_window(const ParabolicDesc& p, const Window& w) {
  std::vector<Index> extra;
  if (p.system.domain != IndexDomain::ColPair) {
    for (const auto& f : p.flags())
      for (const auto& x : f.boundary_points())
        if (p.system.universe().contains(x)) extra.push_back(x);
  }
  Window out = w.merged(extra);
  if (p.system.has_form()) {
    std::vector<Index> partners;
    for (const auto& i : out.indices) partners.push_back(p.system.partner(i));
    out = out.merged(partners);
  }
  return out;
}

std::vector<Col<Rational>> parabolic_rows(const ParabolicDesc& p, const Window& w) {
  const std::size_t n = w.size();
  std::vector<Col<Rational>> rows;
  for (const auto& f : p.flags()) {
    auto r = stabilizer_rows(p.system, f, w);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  auto amb = ambient_rows(p.ambient, n);
  rows.insert(rows.end(), amb.begin(), amb.end());
  for (const auto& tr : p.trace_rows) {
    Col<Rational> r = Col<Rational>::Constant(static_cast<Eigen::Index>(n * n), Rational(0));
    for (const auto& [id, c] : tr) {
      BlockFunctional b = block_by_id(p, id);
      for (std::size_t k = 0; k < n; ++k) {
        if (!b.x.contains(w.indices[k])) continue;
        for (std::size_t j = 0; j < n; ++j) r(static_cast<Eigen::Index>(k * n + j)) += c * p.system.beta(w.indices[k], w.indices[j]);
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

bool stabilizer_contains(const FinOp& op, const ParabolicDesc& p) {
  std::vector<Index> sup = op.support();
  Window w = extend_window(p, Window{p.system.domain, {}}.merged(sup));
  p.system.check_window(w);
  return satisfies(parabolic_rows(p, w), truncate(op, w));
}

MatSpace<Rational> stabilizer_truncation(const ParabolicDesc& p, const Window& w) {
  return solve_rows(w.size(), parabolic_rows(p, w));
}

Window level_window(const ParabolicDesc& p, std::size_t n) {
  std::vector<GenFlag> fs = p.flags();
  std::vector<const GenFlag*> ptrs;
  for (const auto& f : fs) ptrs.push_back(&f);
  return level_window(p.system, n, ptrs);
}

// ---------------------------------------------------------------------------

MatQ window_bracket(const DualSystem& sys, const Window& w, const MatQ& a, const MatQ& b) {
  if (sys.kernel == Kernel::Delta && !sys.has_form()) return commutator<Rational>(a, b);
  return twisted_bracket(a, b, MatQ(sys.gram(w).transpose()));
}

namespace {

/// The bracket on w with the Gram matrix computed once.
std::function<MatQ(const MatQ&, const MatQ&)> bracket_on(const DualSystem& sys, const Window& w) {
  if (sys.kernel == Kernel::Delta && !sys.has_form()) return [](const MatQ& a, const MatQ& b) { return commutator<Rational>(a, b); };
  MatQ gt = sys.gram(w).transpose();
  return [gt](const MatQ& a, const MatQ& b) { return twisted_bracket(a, b, gt); };
}

}  // namespace

MatSpace<Rational> derived_window(const DualSystem& sys, const Window& w, const MatSpace<Rational>& a) {
  MatSpace<Rational> out(a.n());
  const std::size_t cap = static_cast<std::size_t>(a.n() * a.n());
  auto br = bracket_on(sys, w);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      out.add(br(a.basis()[i], a.basis()[j]));
      if (out.dim() == cap) return out;
    }
  return out;
}

bool is_closed_under_bracket(const DualSystem& sys, const Window& w, const MatSpace<Rational>& a) {
  auto br = bracket_on(sys, w);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!a.contains(br(a.basis()[i], a.basis()[j]))) return false;
  return true;
}

SolvableVerdict is_solvable_on(const DualSystem& sys, const Window& w, const MatSpace<Rational>& a) {
  SolvableVerdict v;
  v.level = w.size();
  MatSpace<Rational> cur = a;
  v.derived_dims.push_back(cur.dim());
  while (cur.dim() > 0) {
    MatSpace<Rational> d = derived_window(sys, w, cur);
    v.derived_dims.push_back(d.dim());
    if (d.dim() == cur.dim()) return v;
    cur = std::move(d);
  }
  v.solvable = true;
  return v;
}

SolvableVerdict is_locally_solvable(const ParabolicDesc& p, std::size_t level) {
  Window w = level_window(p, level);
  SolvableVerdict v = is_solvable_on(p.system, w, stabilizer_truncation(p, w));
  v.level = level;
  return v;
}

// ---------------------------------------------------------------------------

Ambiguity so_flag_ambiguity(const DualSystem& sys, const GenFlag& f) {
  if (sys.form != FormKind::Symmetric) throw MissingForm("the three-flag ambiguity needs a symmetric form");
  Ambiguity out;
  bool any = false;
  for (const auto& m : f.coarse()) {
    if (m.is_empty()) continue;
    Isotropy k = classify(sys, m);
    if (k != Isotropy::Isotropic && k != Isotropy::Both) continue;
    any = true;
    out.l = m;
    CutSet perp = annihilator(sys, Side::V, closure(sys, Side::V, m));
    CutSet rest = perp.minus(m);
    auto card = rest.cardinality();
    if (!card || *card != 2) continue;
    std::vector<Index> ab = rest.elements();
    if (sys.partner(ab[0]) != ab[1]) {
      throw UnsupportedKernel("the plane L^perp/L is definite; its isotropic lines are not aligned");
    }
    std::vector<CutSet> base;
    for (const auto& g : f.coarse())
      if (g.subset_of(m) || perp.subset_of(g)) base.push_back(g);
    out.unique = false;
    out.flags.push_back(GenFlag::finite_chain(Side::V, sys, base));
    for (const auto& x : ab) {
      std::vector<CutSet> ext = base;
      ext.push_back(m.unite(CutSet::finite(sys.domain, {x})));
      out.flags.push_back(GenFlag::finite_chain(Side::V, sys, ext));
    }
    return out;
  }
  if (!any) throw Error("flag has no isotropic member");
  return out;
}

std::vector<GenFlag> aligned_selftaut_flags(const DualSystem& sys) {
  if (!sys.has_form() || !sys.dimension) throw MissingForm("needs a finite form-equipped system");
  const auto n = static_cast<std::size_t>(*sys.dimension);
  if (n > 12) throw Error("aligned flag scan is limited to dimension 12");
  std::vector<std::uint32_t> iso;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      auto p = static_cast<std::size_t>(sys.partner(Index::nat(static_cast<std::int64_t>(i + 1))).nat_value() - 1);
      if (mask >> p & 1u) ok = false;
    }
    if (ok) iso.push_back(mask);
  }
  auto to_cut = [&](std::uint32_t mask) {
    std::vector<Index> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) pts.push_back(Index::nat(static_cast<std::int64_t>(i + 1)));
    return CutSet::finite(sys.domain, pts);
  };
  std::vector<GenFlag> out;
  std::vector<std::uint32_t> chain;
  std::function<void()> emit = [&]() {
    std::vector<CutSet> members;
    for (auto m : chain) {
      CutSet c = to_cut(m);
      CutSet perp = annihilator(sys, Side::V, c);
      if (std::find(members.begin(), members.end(), c) == members.end()) members.push_back(c);
      if (std::find(members.begin(), members.end(), perp) == members.end() && perp != sys.universe()) members.push_back(perp);
    }
    out.push_back(GenFlag::finite_chain(Side::V, sys, members));
  };
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t last) {
    emit();
    for (auto m : iso) {
      if ((m & last) != last || m == last) continue;
      chain.push_back(m);
      grow(m);
      chain.pop_back();
    }
  };
  grow(0);
  return out;
}

ParabolicDesc example_rational_borel() {
  DualSystem sys = DualSystem::order_step(IndexDomain::Rat);
  return normalizer_of(sys, GenFlag::rational_cut(Side::V));
}

}  // namespace flagpar
