#include <algorithm>
#include <map>
#include <set>

#include "realform_internal.hpp"

namespace flagpar {

namespace {

MatSpace<GaussianQ> theta_part(const MatSpace<GaussianQ>& s, int sign) {
  return s.kernel([sign](const MatG& x) -> Col<Rational> {
    return coords(MatG(theta(x) - (sign > 0 ? x : MatG(-x))));
  });
}

/// Coefficient matrices of the whole gl(X, Y) block, trace included.
MatSpace<Rational> gl_block_space(const LeviDatum& l, std::size_t block, const Window& w) {
  const DualSystem& sys = l.system;
  const auto n = static_cast<Eigen::Index>(w.size());
  MatSpace<Rational> gens(n);
  Rational eps = sys.form == FormKind::Alternating ? 1 : -1;
  const LeviBlock& b = l.blocks.at(block);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (b.x.contains(w.indices[i]) && b.y.contains(w.indices[j])) {
        MatQ e = zeros<Rational>(n, n);
        e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += 1;
        if (sys.has_form()) e(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += eps;
        gens.add(e);
      }
  return gens;
}

struct BlockOrbit {
  std::vector<std::size_t> blocks;
  bool compact = false;
  bool unitary_gl = false;  // a compact su block, widened to u
  MatSpace<Rational> complex_span;
};

std::vector<BlockOrbit> block_orbits(const RealParabolic& rp, const LeviDatum& l, const Window& w) {
  const RealStructure& rs = rp.form;
  const std::size_t nb = l.blocks.size() + (l.z ? 1 : 0);
  std::vector<MatSpace<Rational>> spaces;
  for (std::size_t b = 0; b < nb; ++b) spaces.push_back(detail::to_operators(l.system, w, levi_block_space(l, b, w)));
  std::vector<BlockOrbit> out;
  std::vector<bool> done(nb, false);
  for (std::size_t b = 0; b < nb; ++b) {
    if (done[b]) continue;
    BlockOrbit o{{b}, false, false, spaces[b]};
    MatSpace<GaussianQ> cb = complexify(spaces[b]);
    for (std::size_t c = 0; c < nb; ++c) {
      if (c == b || done[c]) continue;
      MatSpace<GaussianQ> cc = complexify(spaces[c]);
      bool inside = !cb.basis().empty();
      for (const auto& x : cb.basis()) inside = inside && cc.contains(tau(rs, w, x));
      if (inside) {
        o.blocks.push_back(c);
        o.complex_span = o.complex_span + spaces[c];
        done[c] = true;
        break;
      }
    }
    done[b] = true;
    MatSpace<GaussianQ> real = real_points(rs, w, o.complex_span);
    o.compact = std::all_of(real.basis().begin(), real.basis().end(), [](const MatG& x) { return theta(x) == x; });
    o.unitary_gl = o.compact && o.blocks.size() == 1 && b < l.blocks.size() &&
                   (rs.kind == RealKind::Unitary || rs.kind == RealKind::OrthogonalStar);
    out.push_back(std::move(o));
  }
  return out;
}

RealStructure non_special(RealStructure rs) {
  rs.special = false;
  return rs;
}

MatSpace<GaussianQ> l_tilde_space(const RealParabolic& rp, const LeviDatum& l, const Window& w) {
  MatSpace<GaussianQ> out(static_cast<Eigen::Index>(w.size()));
  for (const auto& o : block_orbits(rp, l, w)) {
    if (o.unitary_gl) {
      MatSpace<Rational> full = detail::to_operators(l.system, w, gl_block_space(l, o.blocks[0], w));
      out = out + real_points(non_special(rp.form), w, full);
    } else {
      out = out + real_points(rp.form, w, o.complex_span);
    }
  }
  return out;
}

/// Elements of s sending the listed basis vectors to zero.
MatSpace<GaussianQ> killing(const MatSpace<GaussianQ>& s, const Window& w, const std::vector<Index>& idx) {
  return s.kernel([&](const MatG& x) -> Col<Rational> {
    std::vector<Rational> v;
    for (const auto& i : idx) {
      auto c = static_cast<Eigen::Index>(w.position(i));
      for (Eigen::Index r = 0; r < x.rows(); ++r) {
        v.push_back(x(r, c).re);
        v.push_back(x(r, c).im);
      }
    }
    Col<Rational> out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Eigen::Index>(k)) = v[k];
    return out;
  });
}

/// Elements of s mapping each listed plane into itself.
MatSpace<GaussianQ> stabilizing(const MatSpace<GaussianQ>& s, const Window& w,
                                const std::vector<std::vector<Index>>& planes) {
  return s.kernel([&](const MatG& x) -> Col<Rational> {
    std::vector<Rational> v;
    for (const auto& plane : planes)
      for (const auto& i : plane) {
        auto c = static_cast<Eigen::Index>(w.position(i));
        for (std::size_t r = 0; r < w.size(); ++r) {
          if (std::find(plane.begin(), plane.end(), w.indices[r]) != plane.end()) continue;
          v.push_back(x(static_cast<Eigen::Index>(r), c).re);
          v.push_back(x(static_cast<Eigen::Index>(r), c).im);
        }
      }
    Col<Rational> out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Eigen::Index>(k)) = v[k];
    return out;
  });
}

std::multiset<std::string> labels(const std::vector<RealBlock>& blocks) {
  std::multiset<std::string> out;
  for (const auto& b : blocks) out.insert(b.label);
  return out;
}

}  // namespace

ManDecomp man_decompose(const RealParabolic& rp, const Window& w) {
  const RealStructure& rs = rp.form;
  ChevalleyData ch = chevalley_truncation(rp.complex, w);
  ManDecomp d;
  d.window = w;
  d.p = real_points(rs, w, ch.p);
  d.n = real_points(rs, w, ch.p_nil);
  MatSpace<GaussianQ> red = real_points(rs, w, ch.p_red);
  d.m = theta_part(red, 1);
  d.a = theta_part(red, -1);
  MatSpace<GaussianQ> ma = d.m + d.a;
  MatSpace<GaussianQ> g = real_algebra(rs, w);
  d.z = centralizer(g, ma);
  d.l_tilde = l_tilde_space(rp, levi_of(rp.complex), w);
  auto& c = d.certificate;
  c.emplace_back("p = m + a + n", d.m.dim() + d.a.dim() + d.n.dim() == d.p.dim() && (ma + d.n) == d.p);
  c.emplace_back("p_red = m + a", ma == red);
  c.emplace_back("a abelian", is_abelian(d.a));
  c.emplace_back("[m, a] = 0", bracket_space(d.m, d.a).dim() == 0);
  c.emplace_back("[m + a, n] in n", bracket_space(ma, d.n).subset_of(d.n));
  c.emplace_back("m + a = l~ + z", ma == (d.l_tilde + d.z).intersect(g));
  return d;
}

RootOracle restricted_root_oracle(const RealStructure& rs, const Window& w, const MatSpace<GaussianQ>& a) {
  for (const auto& x : a.basis())
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        if ((i != j && !(x(i, j) == GaussianQ(0))) || !(x(i, j).im == 0)) {
          throw UnsupportedKernel("a is not a real diagonal space in the adapted basis");
        }
  MatSpace<GaussianQ> g = real_algebra(rs, w);
  MatSpace<GaussianQ> g0 = centralizer(g, a);
  RootOracle r;
  r.dim_a = a.dim();
  r.dim_g0 = g0.dim();
  r.dim_m = g0.dim() - a.dim();
  r.dim_n = (g.dim() - g0.dim()) / 2;
  return r;
}

// ---------------------------------------------------------------------------

DaggerResult construct_dagger(const RealParabolic& rp, std::size_t level) {
  const RealStructure& rs = rp.form;
  const std::string field = rs.field();
  const std::int64_t group = field == "H" ? 4 : 2;
  std::vector<Index> extra = level_window(rp.complex, level).indices;
  if (rs.p)
    for (std::int64_t i = 1; i <= std::min<std::int64_t>(group * *rs.p, 16); ++i) extra.push_back(Index::nat(i));
  Window w = real_window(rs, 0, extra);
  LeviDatum l = levi_of(rp.complex);
  ManDecomp md = man_decompose(rp, w);

  DaggerResult r{rp, false, w, CutSet::empty(IndexDomain::Nat), {}, {}, {}, {}, {}, {}, {}, {}, {}};
  std::set<std::int64_t> xf;
  for (const auto& o : block_orbits(rp, l, w)) {
    // The hermitian form must be nondegenerate on the module X_j itself.
    bool nondegenerate = true;
    for (std::size_t b : o.blocks) {
      const CutSet& x = b < l.blocks.size() ? l.blocks[b].x : *l.z;
      for (const auto& i : x.restrict_to(w))
        nondegenerate = nondegenerate && x.contains(Index::nat(detail::herm_partner(rs, i.nat_value())));
    }
    if (!nondegenerate) continue;
    auto supp = detail::support(w, complexify(o.complex_span));
    for (const auto& i : supp) xf.insert(i.nat_value());
    for (std::size_t b : o.blocks) {
      CutSet s = b < l.blocks.size() ? l.blocks[b].x.unite(l.blocks[b].y) : *l.z;
      r.x_f = r.x_f.unite(s).unite(l.system.partner(s));
    }
  }
  std::set<std::int64_t> used;
  std::vector<Index> killed;
  for (const auto& ix : w.indices) {
    std::int64_t i = ix.nat_value();
    if (xf.count(i)) {
      killed.push_back(ix);
      continue;
    }
    std::int64_t h = detail::herm_partner(rs, i);
    if (xf.count(h) || used.count(i)) continue;
    if (h == i) {
      r.q.push_back(ix);
      continue;
    }
    std::vector<Index> x1{ix};
    if (field == "H") x1.push_back(Index::nat(detail::j_partner(rs, i)));
    std::vector<Index> x2;
    for (const auto& y : x1) {
      x2.push_back(Index::nat(detail::herm_partner(rs, y.nat_value())));
      used.insert(y.nat_value());
      used.insert(x2.back().nat_value());
    }
    r.x1.push_back(x1);
    r.x2.push_back(x2);
  }

  const auto n = static_cast<Eigen::Index>(w.size());
  r.a_dagger = MatSpace<GaussianQ>(n);
  std::vector<std::vector<Index>> planes;
  std::vector<Index> hyperbolic;
  for (std::size_t k = 0; k < r.x1.size(); ++k) {
    MatG dg = zeros<GaussianQ>(n, n);
    for (const auto& i : r.x1[k]) dg(static_cast<Eigen::Index>(w.position(i)), static_cast<Eigen::Index>(w.position(i))) = GaussianQ(1);
    for (const auto& i : r.x2[k]) dg(static_cast<Eigen::Index>(w.position(i)), static_cast<Eigen::Index>(w.position(i))) = GaussianQ(-1);
    r.a_dagger.add(dg);
    std::vector<Index> plane = r.x1[k];
    plane.insert(plane.end(), r.x2[k].begin(), r.x2[k].end());
    planes.push_back(plane);
    hyperbolic.insert(hyperbolic.end(), plane.begin(), plane.end());
  }

  // The tori are taken in the parabolic of the non-special form; the trace is imposed on m-dagger.
  RealParabolic wide = rp;
  wide.form = non_special(rs);
  wide.complex.trace_rows.erase(
      std::remove(wide.complex.trace_rows.begin(), wide.complex.trace_rows.end(), TraceRow{{"total", Rational(1)}}),
      wide.complex.trace_rows.end());
  MatSpace<GaussianQ> p_wide = real_truncation(wide, w);
  std::vector<Index> fq = killed;
  fq.insert(fq.end(), hyperbolic.begin(), hyperbolic.end());
  r.t1 = theta_part(killing(p_wide, w, fq), 1);
  if (field == "C") {
    std::vector<Index> off = killed;
    off.insert(off.end(), r.q.begin(), r.q.end());
    r.t2 = theta_part(stabilizing(centralizer(killing(p_wide, w, off), r.a_dagger), w, planes), 1);
  } else {
    r.t2 = MatSpace<GaussianQ>(n);
  }
  r.l_tilde = md.l_tilde;
  MatSpace<GaussianQ> g = real_algebra(rs, w);
  r.m_dagger = (r.l_tilde + r.t1 + r.t2).intersect(g);

  auto& c = r.certificate;
  c.emplace_back("t' abelian", is_abelian(r.t1));
  c.emplace_back("t'' abelian", is_abelian(r.t2));
  c.emplace_back("a-dagger = a", r.a_dagger == md.a);
  c.emplace_back("m-dagger = m", r.m_dagger == md.m);
  c.emplace_back("m + a = l~ + z", md.certificate.back().second);
  r.fixed_point = r.a_dagger == md.a;
  if (!r.fixed_point) {
    if (!rs.p) throw UnsupportedKernel("the interpolating flag needs a finite hyperbolic part");
    std::vector<CutSet> members;
    std::vector<Index> acc;
    for (const auto& line : r.x1) {
      acc.insert(acc.end(), line.begin(), line.end());
      members.push_back(CutSet::finite(IndexDomain::Nat, acc));
    }
    const DualSystem& sys = rp.complex.system;
    std::vector<CutSet> all = members;
    for (const auto& m : members) all.push_back(sys.universe().minus(detail::herm_image(rs, m)));
    std::sort(all.begin(), all.end(), [](const CutSet& a, const CutSet& b) { return a != b && a.subset_of(b); });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    GenFlag f = GenFlag::finite_chain(Side::V, sys, all);
    ParabolicDesc pd = sys.has_form() ? make_selftaut_parabolic(sys, f, rp.complex.ambient)
                                      : normalizer_of(sys, f, rp.complex.trace_rows);
    r.p_dagger = real_parabolic(pd, rs);
  }
  auto before = real_levi(rp, level);
  auto after = real_levi(r.p_dagger, level);
  c.emplace_back("p-dagger minimal", is_minimal_levi(after));
  c.emplace_back("Levi labels preserved", labels(before) == labels(after));
  ManDecomp md2 = man_decompose(r.p_dagger, w);
  c.emplace_back("m(p-dagger) = m-dagger", md2.m == r.m_dagger);
  return r;
}

}  // namespace flagpar
