#include "flagpar/flags.hpp"

#include <algorithm>

namespace flagpar {

std::string to_string(Schema s) {
  switch (s) {
    case Schema::FiniteChain:
      return "finite-chain";
    case Schema::ColumnSchema:
      return "column";
    case Schema::RationalCut:
      return "rational-cut";
    case Schema::Refined:
      return "refined";
  }
  return "?";
}

std::string to_string(Ambient a) {
  switch (a) {
    case Ambient::GL:
      return "gl";
    case Ambient::SO:
      return "so";
    case Ambient::SP:
      return "sp";
  }
  return "?";
}

std::string to_string(Isotropy i) {
  switch (i) {
    case Isotropy::Isotropic:
      return "isotropic";
    case Isotropy::Coisotropic:
      return "coisotropic";
    case Isotropy::Both:
      return "lagrangian";
    case Isotropy::Neither:
      return "neither";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::optional<Index> some_element(const CutSet& s) {
  if (s.is_empty()) return std::nullopt;
  const Interval& v = s.intervals().front();
  if (!v.lo.infinite && v.lo.closed) return v.lo.point;
  if (v.lo.infinite && v.hi.infinite) return Index::rat(0);
  if (v.lo.infinite) return Index::rat(v.hi.point.rat_value() - 1);
  if (v.hi.infinite) return Index::rat(v.lo.point.rat_value() + 1);
  return Index::rat((v.lo.point.rat_value() + v.hi.point.rat_value()) / 2);
}

std::optional<Index> min_element(const CutSet& s) {
  if (s.is_empty()) return std::nullopt;
  const Bound& lo = s.intervals().front().lo;
  if (!lo.infinite && lo.closed) return lo.point;
  return std::nullopt;
}

std::optional<Index> max_element(const CutSet& s) {
  if (s.is_empty()) return std::nullopt;
  const Bound& hi = s.intervals().back().hi;
  if (hi.infinite) return std::nullopt;
  if (hi.closed) return hi.point;
  if (is_discrete(s.domain())) return predecessor(hi.point);
  return std::nullopt;
}

std::vector<CutSet> window_cells(const Window& w) {
  std::vector<CutSet> cells;
  if (w.indices.empty()) {
    cells.push_back(CutSet::full(w.domain));
    return cells;
  }
  cells.push_back(CutSet::less(w.indices.front()));
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    cells.push_back(CutSet::greater(w.indices[k]).intersect(CutSet::less(w.indices[k + 1])));
  }
  cells.push_back(CutSet::greater(w.indices.back()));
  cells.erase(std::remove_if(cells.begin(), cells.end(), [](const CutSet& c) { return c.is_empty(); }), cells.end());
  return cells;
}

std::vector<Index> representatives(const DualSystem& sys, const CutSet& s, const Window& w) {
  std::vector<Index> reps = s.restrict_to(w);
  if (sys.kernel == Kernel::OrderStep && !sys.has_form()) {
    for (const auto& c : window_cells(w))
      if (auto x = some_element(s.intersect(c))) reps.push_back(*x);
  }
  return reps;
}

// ---------------------------------------------------------------------------

GenFlag::GenFlag(Side side, Schema schema, std::vector<CutSet> chain, std::vector<RefinedGap> refined)
    : side_(side), schema_(schema), chain_(std::move(chain)), refined_(std::move(refined)) {
  if (chain_.size() < 2) throw Error("a flag chain needs at least 0 and the whole space");
  if (!chain_.front().is_empty()) throw Error("a flag chain starts at 0");
  for (std::size_t k = 0; k + 1 < chain_.size(); ++k) {
    if (chain_[k] == chain_[k + 1] || !chain_[k].subset_of(chain_[k + 1])) {
      throw Error("coarse chain is not strictly increasing at position " + std::to_string(k));
    }
  }
  std::sort(refined_.begin(), refined_.end(), [](const RefinedGap& a, const RefinedGap& b) { return a.gap < b.gap; });
  for (const auto& r : refined_)
    if (r.gap + 1 >= chain_.size()) throw Error("refined gap out of range");
}

GenFlag GenFlag::finite_chain(Side side, const DualSystem& sys, std::vector<CutSet> members) {
  auto rep = validate_chain(side, sys, members, Window{sys.domain, {}});
  if (!rep.valid) throw Error("invalid flag: " + rep.message);
  std::vector<CutSet> chain{CutSet::empty(sys.domain)};
  for (auto& m : members)
    if (!m.is_empty() && m != sys.universe()) chain.push_back(m);
  chain.push_back(sys.universe());
  std::sort(chain.begin(), chain.end(), [](const CutSet& a, const CutSet& b) { return a != b && a.subset_of(b); });
  return GenFlag(side, Schema::FiniteChain, std::move(chain), {});
}

GenFlag GenFlag::column_schema(Side side, Direction dir) {
  return GenFlag(side, Schema::ColumnSchema,
                 {CutSet::empty(IndexDomain::ColPair), CutSet::full(IndexDomain::ColPair)}, {{0, dir}});
}

GenFlag GenFlag::rational_cut(Side side, Direction dir) {
  return GenFlag(side, Schema::RationalCut, {CutSet::empty(IndexDomain::Rat), CutSet::full(IndexDomain::Rat)},
                 {{0, dir}});
}

std::optional<Direction> GenFlag::gap_direction(std::size_t gap) const {
  for (const auto& r : refined_)
    if (r.gap == gap) return r.dir;
  return std::nullopt;
}

namespace {

void push_unique(std::vector<CutSet>& v, CutSet s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(std::move(s));
}

CutSet refined_member(const CutSet& a, const CutSet& d, Direction dir, const Index& x, bool inclusive) {
  CutSet ray = dir == Direction::Ascending ? (inclusive ? CutSet::less_equal(x) : CutSet::less(x))
                                           : (inclusive ? CutSet::greater_equal(x) : CutSet::greater(x));
  return a.unite(d.intersect(ray));
}

}  // namespace

std::vector<CutSet> GenFlag::members_near(const Window& w) const {
  std::vector<CutSet> out;
  for (const auto& c : chain_) push_unique(out, c);
  for (const auto& r : refined_) {
    const CutSet& a = chain_[r.gap];
    CutSet d = chain_[r.gap + 1].minus(a);
    std::vector<Index> xs = d.restrict_to(w);
    for (const auto& cell : window_cells(w)) {
      CutSet piece = d.intersect(cell);
      auto x = r.dir == Direction::Ascending ? min_element(piece) : max_element(piece);
      if (!x) x = some_element(piece);
      if (x) xs.push_back(*x);
    }
    for (const auto& x : xs) {
      push_unique(out, refined_member(a, d, r.dir, x, false));
      push_unique(out, refined_member(a, d, r.dir, x, true));
    }
  }
  std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) { return a != b && a.subset_of(b); });
  return out;
}

std::vector<IpsPair> GenFlag::ips_pairs_near(const Window& w) const {
  std::vector<IpsPair> out;
  for (std::size_t k = 0; k + 1 < chain_.size(); ++k) {
    const CutSet& a = chain_[k];
    CutSet d = chain_[k + 1].minus(a);
    auto dir = gap_direction(k);
    if (!dir) {
      if (!d.restrict_to(w).empty()) out.push_back({a, chain_[k + 1]});
      continue;
    }
    for (const auto& x : d.restrict_to(w)) {
      out.push_back({refined_member(a, d, *dir, x, false), refined_member(a, d, *dir, x, true)});
    }
  }
  return out;
}

bool GenFlag::is_member(const CutSet& s) const {
  for (const auto& c : chain_)
    if (c == s) return true;
  for (const auto& r : refined_) {
    const CutSet& a = chain_[r.gap];
    const CutSet& b = chain_[r.gap + 1];
    if (!a.subset_of(s) || !s.subset_of(b)) continue;
    CutSet d = b.minus(a);
    CutSet e = s.minus(a);
    if (e.is_empty()) continue;
    std::vector<Index> xs;
    if (r.dir == Direction::Ascending) {
      const Bound& hi = e.intervals().back().hi;
      if (hi.infinite) continue;
      xs.push_back(hi.point);
      if (auto p = predecessor(hi.point)) xs.push_back(*p);
    } else {
      const Bound& lo = e.intervals().front().lo;
      if (lo.infinite) continue;
      xs.push_back(lo.point);
    }
    for (const auto& x : xs) {
      if (!d.contains(x)) continue;
      if (refined_member(a, d, r.dir, x, false) == s || refined_member(a, d, r.dir, x, true) == s) return true;
    }
  }
  return false;
}

bool GenFlag::has_immediate_neighbour(std::size_t k) const {
  if (k == 0 || k + 1 == chain_.size()) return true;
  auto below = gap_direction(k - 1);
  auto above = gap_direction(k);
  if (!below || !above) return true;
  CutSet d_below = chain_[k].minus(chain_[k - 1]);
  CutSet d_above = chain_[k + 1].minus(chain_[k]);
  // Immediate predecessor: the top step of the gap below exists.
  bool pred = *below == Direction::Ascending ? max_element(d_below).has_value() : min_element(d_below).has_value();
  bool succ = *above == Direction::Ascending ? min_element(d_above).has_value() : max_element(d_above).has_value();
  return pred || succ;
}

std::vector<Index> GenFlag::boundary_points() const {
  std::vector<Index> pts;
  for (const auto& c : chain_)
    for (const auto& v : c.intervals()) {
      if (!v.lo.infinite) pts.push_back(v.lo.point);
      if (!v.hi.infinite) pts.push_back(v.hi.point);
    }
  return pts;
}

bool operator==(const GenFlag& a, const GenFlag& b) {
  if (a.side_ != b.side_ || a.chain_ != b.chain_ || a.refined_.size() != b.refined_.size()) return false;
  for (std::size_t k = 0; k < a.refined_.size(); ++k)
    if (a.refined_[k].gap != b.refined_[k].gap || a.refined_[k].dir != b.refined_[k].dir) return false;
  return true;
}

std::string to_string(const GenFlag& f) {
  std::string out = "(flag " + to_string(f.side()) + " " + to_string(f.schema());
  for (std::size_t k = 0; k < f.coarse().size(); ++k) {
    out += " " + to_string(f.coarse()[k]);
    if (auto d = f.gap_direction(k)) out += d == Direction::Ascending ? " (refine up)" : " (refine down)";
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

ValidationReport validate_chain(Side, const DualSystem& sys, const std::vector<CutSet>& members, const Window& w) {
  ValidationReport rep;
  CutSet u = sys.universe();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].domain() != sys.domain) throw DomainMismatch("flag member over another index domain");
    if (!members[i].subset_of(u)) {
      rep.valid = false;
      rep.message = "member " + to_string(members[i]) + " leaves the space";
      rep.witness = some_element(members[i].minus(u));
      return rep;
    }
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const CutSet& a = members[i];
      const CutSet& b = members[j];
      if (a == b) {
        rep.valid = false;
        rep.message = "duplicate member " + to_string(a);
        return rep;
      }
      if (!a.subset_of(b) && !b.subset_of(a)) {
        rep.valid = false;
        rep.message = "members " + to_string(a) + " and " + to_string(b) + " are incomparable";
        rep.witness = min_element(a.minus(b));
        if (!rep.witness) rep.witness = some_element(a.minus(b));
        return rep;
      }
    }
  }
  std::vector<CutSet> chain{CutSet::empty(sys.domain)};
  for (const auto& m : members)
    if (!m.is_empty() && m != u) chain.push_back(m);
  chain.push_back(u);
  std::sort(chain.begin(), chain.end(), [](const CutSet& a, const CutSet& b) { return a != b && a.subset_of(b); });
  for (const auto& i : w.indices) {
    if (!u.contains(i)) {
      rep.valid = false;
      rep.message = "window index " + to_string(i) + " outside the space";
      rep.witness = i;
      return rep;
    }
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!chain[k + 1].minus(chain[k]).restrict_to(w).empty()) rep.ips.push_back({chain[k], chain[k + 1]});
  }
  return rep;
}

ValidationReport validate_genflag(const DualSystem& sys, const GenFlag& f, const Window& w) {
  ValidationReport rep;
  if (f.domain() != sys.domain) throw DomainMismatch("flag and system over different domains");
  for (std::size_t k = 0; k < f.coarse().size(); ++k) {
    if (!f.has_immediate_neighbour(k)) {
      rep.valid = false;
      rep.message = "member " + to_string(f.coarse()[k]) + " has no immediate predecessor or successor";
      return rep;
    }
  }
  rep.ips = f.ips_pairs_near(w);
  for (const auto& i : w.indices) {
    if (!f.universe().contains(i)) continue;
    int hits = 0;
    for (const auto& p : rep.ips)
      if (p.upper.contains(i) && !p.lower.contains(i)) ++hits;
    if (hits != 1) {
      rep.valid = false;
      rep.message = "index " + to_string(i) + " lies in " + std::to_string(hits) + " IPS gaps";
      rep.witness = i;
      return rep;
    }
  }
  return rep;
}

SemiclosedReport is_semiclosed(const DualSystem& sys, const GenFlag& f, const Window& w) {
  SemiclosedReport rep;
  for (const auto& m : f.members_near(w)) {
    CutSet c = closure(sys, f.side(), m).intersect(f.universe());
    if (c == m) continue;
    auto fail = [&](const std::string& why) {
      rep.holds = false;
      rep.witness = m;
      rep.message = to_string(m) + " has closure " + to_string(c) + ": " + why;
      return rep;
    };
    if (!f.is_member(c)) return fail("closure is not a member");
    CutSet gap = c.minus(m);
    std::vector<Index> probe;
    if (auto x = some_element(gap)) probe.push_back(*x);
    if (auto x = min_element(gap)) probe.push_back(*x);
    if (auto x = max_element(gap)) probe.push_back(*x);
    for (const auto& between : f.members_near(w.merged(probe))) {
      if (between != m && between != c && m.subset_of(between) && between.subset_of(c)) {
        return fail("members lie strictly between");
      }
    }
  }
  return rep;
}

GenFlag dual_flag(const DualSystem& sys, const GenFlag& f) {
  const auto& ch = f.coarse();
  std::vector<CutSet> dual;
  for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
    CutSet a = annihilator(sys, f.side(), *it);
    if (dual.empty() || dual.back() != a) dual.push_back(a);
  }
  std::vector<RefinedGap> refined;
  if (!f.refined().empty()) {
    bool trivial = ch.size() == 2;
    if (dual.size() != ch.size() || (sys.kernel != Kernel::Delta && !trivial) || sys.has_form()) {
      throw UnsupportedKernel("dual of a refined flag needs the delta pairing or the trivial coarse chain");
    }
    for (const auto& r : f.refined()) {
      refined.push_back({ch.size() - 2 - r.gap, r.dir == Direction::Ascending ? Direction::Descending : Direction::Ascending});
    }
  }
  return GenFlag(other(f.side()), f.schema(), std::move(dual), std::move(refined));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Col<Rational>> member_rows(const DualSystem& sys, Side side, const CutSet& s, const Window& w) {
  const std::size_t n = w.size();
  std::vector<Col<Rational>> rows;
  std::vector<Index> reps = representatives(sys, s, w);
  for (std::size_t a = 0; a < n; ++a) {
    const Index& out = w.indices[a];
    if (s.contains(out)) continue;
    for (const auto& x : reps) {
      Col<Rational> r = Col<Rational>::Constant(static_cast<Eigen::Index>(n * n), Rational(0));
      bool nonzero = false;
      for (std::size_t b = 0; b < n; ++b) {
        // V side: row `out` of C against beta(x, w_b); W side: column `out` against beta(v_b, x).
        Rational p = side == Side::V ? sys.beta(x, w.indices[b]) : sys.beta(w.indices[b], x);
        if (p == 0) continue;
        std::size_t pos = side == Side::V ? a * n + b : b * n + a;
        r(static_cast<Eigen::Index>(pos)) = p;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

std::vector<Col<Rational>> stabilizer_rows(const DualSystem& sys, const GenFlag& f, const Window& w) {
  std::vector<Col<Rational>> rows;
  for (const auto& m : f.members_near(w)) {
    auto r = member_rows(sys, f.side(), m, w);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

std::vector<Col<Rational>> ambient_rows(Ambient a, std::size_t n) {
  std::vector<Col<Rational>> rows;
  if (a == Ambient::GL) return rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (a == Ambient::SP && i == j) continue;
      Col<Rational> r = Col<Rational>::Constant(static_cast<Eigen::Index>(n * n), Rational(0));
      r(static_cast<Eigen::Index>(i * n + j)) += 1;
      r(static_cast<Eigen::Index>(j * n + i)) += a == Ambient::SO ? 1 : -1;
      rows.push_back(std::move(r));
    }
  return rows;
}

MatSpace<Rational> solve_rows(std::size_t n, const std::vector<Col<Rational>>& rows) {
  const auto nn = static_cast<Eigen::Index>(n * n);
  // Row-reduce incrementally so that repeated conditions cost nothing.
  Reducer red(nn);
  for (const auto& r : rows) red.insert(r);
  MatQ a(static_cast<Eigen::Index>(red.rank()), nn);
  for (std::size_t k = 0; k < red.rank(); ++k) a.row(static_cast<Eigen::Index>(k)) = red.rows()[k].transpose();
  MatQ ns = red.rank() ? nullspace<Rational>(a) : identity<Rational>(nn);
  MatSpace<Rational> out(static_cast<Eigen::Index>(n));
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    MatQ m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i)
      for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) m(i, j) = ns(i * static_cast<Eigen::Index>(n) + j, c);
    out.add(m);
  }
  return out;
}

bool satisfies(const std::vector<Col<Rational>>& rows, const MatQ& c) {
  const auto n = c.rows();
  for (const auto& r : rows) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (c(i, j) != 0) s += r(i * n + j) * c(i, j);
    if (s != 0) return false;
  }
  return true;
}

Window level_window(const DualSystem& sys, std::size_t n, const std::vector<const GenFlag*>& flags) {
  std::vector<Index> extra;
  Window w{sys.domain, {}};
  if (sys.domain == IndexDomain::Rat) {
    for (std::size_t k = 1; k <= n; ++k) extra.push_back(Index::rat(static_cast<long>(k)));
  } else {
    std::size_t m = n;
    if (sys.dimension) m = std::min<std::size_t>(m, static_cast<std::size_t>(*sys.dimension));
    w = window(sys.domain, m);
  }
  if (sys.domain == IndexDomain::Nat || sys.domain == IndexDomain::Rat) {
    for (const auto* f : flags)
      for (const auto& p : f->boundary_points())
        if (sys.universe().contains(p)) extra.push_back(p);
  }
  w = w.merged(extra);
  if (sys.has_form()) {
    std::vector<Index> partners;
    for (const auto& i : w.indices) partners.push_back(sys.partner(i));
    w = w.merged(partners);
  }
  return w;
}

Verdict is_taut_couple(const DualSystem& sys, TautCouple& c, std::size_t level, Ambient a) {
  Verdict v;
  v.level = level;
  Window w = level_window(sys, level, {&c.v, &c.w});
  if (sys.domain != IndexDomain::ColPair) {
    // the annihilators' own boundaries, so a missing perp member is seen
    std::vector<Index> extra;
    for (const GenFlag* f : {&c.v, &c.w})
      for (const auto& m : f->coarse()) {
        const CutSet perp = annihilator(sys, f->side(), m);
        for (const auto& iv : perp.intervals()) {
          if (!iv.lo.infinite && sys.universe().contains(iv.lo.point)) extra.push_back(iv.lo.point);
          if (!iv.hi.infinite && sys.universe().contains(iv.hi.point)) extra.push_back(iv.hi.point);
        }
      }
    w = w.merged(extra);
    if (sys.has_form()) {
      std::vector<Index> partners;
      for (const auto& i : w.indices) partners.push_back(sys.partner(i));
      w = w.merged(partners);
    }
  }
  const std::size_t n = w.size();
  // (i) F^perp invariant under the stabilizer of 'F, then (ii) symmetrically.
  for (int pass = 0; pass < 2; ++pass) {
    const GenFlag& fixed = pass == 0 ? c.w : c.v;
    const GenFlag& tested = pass == 0 ? c.v : c.w;
    auto rows = stabilizer_rows(sys, fixed, w);
    auto amb = ambient_rows(a, n);
    rows.insert(rows.end(), amb.begin(), amb.end());
    MatSpace<Rational> stab = solve_rows(n, rows);
    for (const auto& m : tested.members_near(w)) {
      CutSet perp = annihilator(sys, tested.side(), m);
      auto check = member_rows(sys, other(tested.side()), perp, w);
      for (const auto& b : stab.basis()) {
        if (!satisfies(check, b)) {
          v.holds = false;
          v.witness = from_coefficients(b, w);
          v.detail = "annihilator of " + to_string(m) + " is not invariant";
          return v;
        }
      }
    }
  }
  if (!c.verified_level || *c.verified_level < level) c.verified_level = level;
  return v;
}

Isotropy classify(const DualSystem& sys, const CutSet& f) {
  if (!sys.has_form()) throw MissingForm("isotropy needs a form");
  CutSet perp = annihilator(sys, Side::V, f);
  bool iso = f.subset_of(perp);
  bool coiso = perp.subset_of(f);
  if (iso && coiso) return Isotropy::Both;
  if (iso) return Isotropy::Isotropic;
  if (coiso) return Isotropy::Coisotropic;
  return Isotropy::Neither;
}

SelfTautVerdict is_selftaut(const DualSystem& sys, const GenFlag& f, std::size_t level) {
  if (!sys.has_form()) throw MissingForm("self-tautness needs a symmetric or alternating form");
  SelfTautVerdict out;
  for (const auto& m : f.coarse()) {
    Isotropy k = classify(sys, m);
    out.classes.push_back(k);
    if (k == Isotropy::Neither && !out.bad_member) out.bad_member = m;
  }
  if (out.bad_member) {
    out.verdict.holds = false;
    out.verdict.level = level;
    out.verdict.detail = "member " + to_string(*out.bad_member) + " is neither isotropic nor coisotropic";
    return out;
  }
  TautCouple c{f, GenFlag(Side::W, f.schema(), f.coarse(), f.refined()), std::nullopt};
  out.verdict = is_taut_couple(sys, c, level);
  return out;
}

DualSystem limit_ordinal_system() { return DualSystem::delta(IndexDomain::ColPair); }

TautCouple example_limit_ordinal_couple() {
  GenFlag v = GenFlag::column_schema(Side::V);
  return {v, dual_flag(limit_ordinal_system(), v), std::nullopt};
}

}  // namespace flagpar
