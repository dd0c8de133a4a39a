#include "flagpar/levi.hpp"

#include <algorithm>

namespace flagpar {

namespace {

const GenFlag& v_flag(const ParabolicDesc& p) {
  if (const auto* c = std::get_if<TautCouple>(&p.couple)) return c->v;
  return std::get<SelfTautFlag>(p.couple).flag;
}

bool isotropic(const DualSystem& sys, const CutSet& s) {
  Isotropy k = classify(sys, s);
  return k == Isotropy::Isotropic || k == Isotropy::Both;
}

bool coisotropic(const DualSystem& sys, const CutSet& s) {
  Isotropy k = classify(sys, s);
  return k == Isotropy::Coisotropic || k == Isotropy::Both;
}

bool is_closed(const DualSystem& sys, const CutSet& s) {
  return closure(sys, Side::V, s).intersect(sys.universe()) == s;
}

std::string dim_string(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "inf"; }

}  // namespace

std::vector<JBlock> extract_J(const ParabolicDesc& p) {
  const GenFlag& f = v_flag(p);
  const auto& ch = f.coarse();
  std::vector<JBlock> out;
  for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
    if (f.gap_direction(k)) continue;
    const CutSet& lo = ch[k];
    const CutSet& hi = ch[k + 1];
    auto card = hi.minus(lo).cardinality();
    if (card && *card <= 1) continue;
    if (!is_closed(p.system, lo)) continue;
    if (p.self_taut() && p.system.has_form() && !isotropic(p.system, hi)) continue;
    out.push_back({k, {lo, hi}, card});
  }
  return out;
}

LeviDatum levi_of(const ParabolicDesc& p) {
  const DualSystem& sys = p.system;
  LeviDatum l{sys, p.ambient, {}, std::nullopt};
  for (const auto& j : extract_J(p)) {
    CutSet x = j.pair.upper.minus(j.pair.lower);
    CutSet y = annihilator(sys, Side::V, j.pair.lower).minus(annihilator(sys, Side::V, j.pair.upper));
    l.blocks.push_back({x, y});
  }
  if (p.self_taut() && sys.has_form()) {
    const auto& ch = v_flag(p).coarse();
    CutSet top = CutSet::empty(sys.domain);
    CutSet bottom = sys.universe();
    for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
      if (isotropic(sys, ch[k + 1])) top = top.unite(ch[k + 1]);
      if (!ch[k].is_empty() && is_closed(sys, ch[k]) && coisotropic(sys, ch[k])) bottom = bottom.intersect(ch[k]);
    }
    CutSet z = bottom.minus(top);
    auto card = z.cardinality();
    bool trivial = z.is_empty() || (p.ambient == Ambient::SO && card && *card <= 2);
    if (!trivial) l.z = z;
  }
  return l;
}

std::string to_string(const LeviDatum& l) {
  std::string out = "(levi " + to_string(l.ambient);
  for (const auto& b : l.blocks) {
    out += " (sl " + to_string(b.x) + " " + to_string(b.y) + " dim " + dim_string(b.x.cardinality()) + ")";
  }
  if (l.z) out += std::string(" (") + (l.ambient == Ambient::SP ? "sp " : "so ") + to_string(*l.z) + ")";
  return out + ")";
}

void check_levi_datum(const LeviDatum& l, const Window& w) {
  const DualSystem& sys = l.system;
  for (std::size_t a = 0; a < l.blocks.size(); ++a) {
    auto xs = l.blocks[a].x.restrict_to(w);
    for (std::size_t b = 0; b < l.blocks.size(); ++b) {
      auto ys = l.blocks[b].y.restrict_to(w);
      bool paired = false;
      for (const auto& x : xs)
        for (const auto& y : ys)
          if (sys.beta(x, y) != 0) {
            if (a != b) throw Error("blocks " + std::to_string(a) + " and " + std::to_string(b) + " are paired");
            paired = true;
          }
      if (a == b && !xs.empty() && !paired) throw Error("block " + std::to_string(a) + " is degenerate on the window");
    }
    if (sys.has_form() && (!isotropic(sys, l.blocks[a].x) || !isotropic(sys, l.blocks[a].y))) {
      throw Error("block " + std::to_string(a) + " is not isotropic");
    }
  }
  for (std::size_t a = 0; a < l.blocks.size(); ++a) {
    auto c = l.blocks[a].x.cardinality();
    if (c && *c < 2) throw Error("block " + std::to_string(a) + " gives sl(1) = 0");
  }
  if (l.z && sys.has_form() && sys.partner(*l.z) != *l.z) throw Error("Z block is degenerate");
  if (l.z) {
    auto c = l.z->cardinality();
    if (c && (*c == 0 || (l.ambient == Ambient::SO && *c <= 2))) throw Error("Z block carries no semisimple part");
  }
}

// ---------------------------------------------------------------------------

std::vector<CutSet> u_sets(const LeviDatum& l) {
  std::vector<CutSet> out;
  CutSet acc = CutSet::empty(l.system.domain);
  for (const auto& b : l.blocks) {
    acc = acc.unite(b.x);
    CutSet w_side = annihilator(l.system, Side::V, acc).unite(b.y);
    out.push_back(annihilator(l.system, Side::W, w_side));
  }
  return out;
}

namespace {

std::vector<CutSet> with_perps(const DualSystem& sys, std::vector<CutSet> members) {
  std::vector<CutSet> all = members;
  for (const auto& m : members) {
    CutSet perp = annihilator(sys, Side::V, m);
    if (std::find(all.begin(), all.end(), perp) == all.end()) all.push_back(perp);
  }
  return all;
}

std::vector<CutSet> dedupe(std::vector<CutSet> v, const CutSet& universe) {
  std::vector<CutSet> out;
  for (auto& m : v)
    if (!m.is_empty() && m != universe && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  return out;
}

TautCouple couple_from(const LeviDatum& l, const GenFlag& v) {
  if (l.system.has_form()) return {v, GenFlag(Side::W, v.schema(), v.coarse(), v.refined()), std::nullopt};
  return {v, dual_flag(l.system, v), std::nullopt};
}

}  // namespace

TautCouple minimal_taut_couple(const LeviDatum& l) {
  const DualSystem& sys = l.system;
  auto us = u_sets(l);
  std::vector<CutSet> members;
  for (std::size_t j = 0; j < us.size(); ++j) {
    members.push_back(us[j]);
    members.push_back(us[j].unite(l.blocks[j].x));
  }
  if (sys.has_form()) members = with_perps(sys, members);
  GenFlag v = GenFlag::finite_chain(Side::V, sys, dedupe(members, sys.universe()));
  return couple_from(l, v);
}

TautCouple maximal_taut_couple(const LeviDatum& l) {
  const DualSystem& sys = l.system;
  const CutSet u = sys.universe();
  auto us = u_sets(l);
  std::vector<CutSet> members;
  CutSet used = CutSet::empty(sys.domain);
  for (std::size_t j = 0; j < us.size(); ++j) {
    members.push_back(us[j]);
    members.push_back(us[j].unite(l.blocks[j].x));
    used = used.unite(l.blocks[j].x).unite(l.blocks[j].y);
  }
  if (sys.has_form()) {
    if (l.z) used = used.unite(*l.z);
    CutSet rest = u.minus(used);
    if (!rest.cardinality()) throw UnsupportedKernel("infinite residual under a form has no aligned isotropic half");
    CutSet top = CutSet::empty(sys.domain);
    for (const auto& b : l.blocks) top = top.unite(b.x);
    std::size_t definite = 0;
    for (const auto& r : rest.elements()) {
      Index q = sys.partner(r);
      if (q == r) {
        ++definite;
        continue;
      }
      if (r < q) {
        top = top.unite(CutSet::finite(sys.domain, {r}));
        members.push_back(top);
      }
    }
    if (definite > 0 && (l.z || definite > 2)) throw Error("definite residual indices must form the Z block");
    members = with_perps(sys, members);
    return couple_from(l, GenFlag::finite_chain(Side::V, sys, dedupe(members, u)));
  }
  std::vector<CutSet> chain{CutSet::empty(sys.domain)};
  for (auto& m : dedupe(members, u)) chain.push_back(m);
  chain.push_back(u);
  std::sort(chain.begin(), chain.end(), [](const CutSet& a, const CutSet& b) { return a != b && a.subset_of(b); });
  std::vector<RefinedGap> refined;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    bool block = false;
    for (std::size_t j = 0; j < us.size(); ++j)
      if (chain[k] == us[j] && chain[k + 1] == us[j].unite(l.blocks[j].x)) block = true;
    auto card = chain[k + 1].minus(chain[k]).cardinality();
    if (!block && (!card || *card > 1)) refined.push_back({k, Direction::Ascending});
  }
  Schema s = refined.empty() ? Schema::FiniteChain : Schema::Refined;
  return couple_from(l, GenFlag(Side::V, s, std::move(chain), std::move(refined)));
}

ParabolicDesc maximal_parabolic(const LeviDatum& l) {
  TautCouple c = maximal_taut_couple(l);
  if (l.system.has_form()) return make_selftaut_parabolic(l.system, c.v, l.ambient);
  return make_parabolic(l.system, std::move(c));
}

MatSpace<Rational> levi_block_space(const LeviDatum& l, std::size_t block, const Window& w) {
  const DualSystem& sys = l.system;
  const auto n = static_cast<Eigen::Index>(w.size());
  MatSpace<Rational> gens(n);
  Rational eps = sys.form == FormKind::Alternating ? 1 : -1;
  auto unit = [&](std::size_t i, std::size_t j) {
    MatQ e = zeros<Rational>(n, n);
    e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += 1;
    if (sys.has_form()) e(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += eps;
    return e;
  };
  if (block == l.blocks.size()) {
    if (!l.z) return gens;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i; j < w.size(); ++j)
        if (l.z->contains(w.indices[i]) && l.z->contains(w.indices[j])) gens.add(unit(i, j));
    return gens;
  }
  const LeviBlock& b = l.blocks.at(block);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (b.x.contains(w.indices[i]) && b.y.contains(w.indices[j])) gens.add(unit(i, j));
  return gens.kernel([&](const MatQ& c) -> Col<Rational> {
    Col<Rational> t = Col<Rational>::Constant(1, Rational(0));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (c(i, j) != 0 && b.x.contains(w.indices[static_cast<std::size_t>(i)]))
          t(0) += c(i, j) * sys.beta(w.indices[static_cast<std::size_t>(i)], w.indices[static_cast<std::size_t>(j)]);
    return t;
  });
}

}  // namespace flagpar
