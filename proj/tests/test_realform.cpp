#include <gtest/gtest.h>

#include <random>

#include "flagpar/realform.hpp"

using namespace flagpar;

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

const std::vector<std::string> kCatalog{"sl(inf;R)", "gl(inf;R)", "sl(inf;H)", "gl(inf;H)", "su(1,inf)", "u(2,inf)",
                                        "so(1,inf)", "so*(2inf)", "sp(inf;R)", "sp(1,inf)"};

RealParabolic su1_line() {
  RealStructure rs = make_real_form("su(1,inf)");
  GenFlag f = GenFlag::finite_chain(Side::V, rs.system, {fin({1}), tau_member(rs, fin({1}))});
  return real_parabolic(normalizer_of(rs.system, f), rs);
}

}  // namespace

TEST(RealForm, CatalogNames) {
  for (const auto& name : kCatalog) EXPECT_NO_THROW(make_real_form(name)) << name;
  EXPECT_THROW(make_real_form("su(inf;Q)"), Error);
  EXPECT_TRUE(make_real_form("su(1,inf)").special);
  EXPECT_FALSE(make_real_form("u(1,inf)").special);
  EXPECT_EQ(make_real_form("sp(1,inf)").field(), "H");
  EXPECT_EQ(make_real_form("so(1,inf)").field(), "R");
}

TEST(RealForm, WindowDimensionsAreClassical) {
  for (const auto& name : kCatalog) {
    RealStructure rs = make_real_form(name);
    for (std::size_t n : {2u, 4u}) {
      Window w = real_window(rs, n);
      EXPECT_EQ(real_algebra(rs, w).dim(), classical_dimension(rs, w)) << name << " n=" << n;
    }
  }
}

TEST(RealForm, SmallCasesByHand) {
  // su(1,2) has real dimension 8, sp(4;R) has 10, so(1,2) has 3
  EXPECT_EQ(real_algebra(make_real_form("su(1,inf)"), real_window(make_real_form("su(1,inf)"), 3)).dim(), 8u);
  RealStructure sp = make_real_form("sp(inf;R)");
  EXPECT_EQ(real_algebra(sp, real_window(sp, 4)).dim(), 10u);
  RealStructure so = make_real_form("so(1,inf)");
  EXPECT_EQ(real_algebra(so, real_window(so, 3)).dim(), 3u);
}

TEST(RealForm, TauIsAnInvolutiveAutomorphism) {
  std::mt19937 rng(81);
  for (const auto& name : kCatalog) {
    RealStructure rs = make_real_form(name);
    Window w = real_window(rs, 4);
    MatSpace<Rational> g = complex_algebra(rs, w);
    for (int c = 0; c < 5; ++c) {
      // random elements of g_C
      MatG x = zeros<GaussianQ>(g.n(), g.n()), y = x;
      for (const auto& b : g.basis()) {
        x += b.cast<GaussianQ>() * GaussianQ(Rational(static_cast<int>(rng() % 3) - 1), Rational(static_cast<int>(rng() % 3) - 1));
        y += b.cast<GaussianQ>() * GaussianQ(Rational(static_cast<int>(rng() % 3) - 1));
      }
      EXPECT_EQ(tau(rs, w, tau(rs, w, x)), x) << name;
      EXPECT_EQ(tau(rs, w, commutator<GaussianQ>(x, y)), commutator<GaussianQ>(tau(rs, w, x), tau(rs, w, y))) << name;
    }
    const MatSpace<GaussianQ> real = real_algebra(rs, w);
    for (const auto& b : real.basis()) EXPECT_EQ(tau(rs, w, b), b) << name;
  }
}

TEST(RealParabolic, TauStability) {
  RealStructure rs = make_real_form("su(1,inf)");
  GenFlag bad = GenFlag::finite_chain(Side::V, rs.system, {fin({1})});
  try {
    real_parabolic(normalizer_of(rs.system, bad), rs);
    FAIL() << "expected NotTauStable";
  } catch (const NotTauStable& e) {
    EXPECT_EQ(e.witness(), fin({1}));
  }
  EXPECT_NO_THROW(su1_line());
}

TEST(RealParabolic, RealPointsLieInTheComplexTruncation) {
  RealParabolic rp = su1_line();
  Window w = real_level_window(rp, 3);
  MatSpace<GaussianQ> pr = real_truncation(rp, w);
  MatSpace<GaussianQ> pc = complexify(complex_truncation(rp, w));
  for (const auto& b : pr.basis()) {
    EXPECT_TRUE(pc.contains(b));
    EXPECT_TRUE(real_contains(rp, w, b));
    EXPECT_EQ(tau(rp.form, w, b), b);
  }
  // p_R is a real form of p: its real dimension is the complex dimension of p
  MatSpace<Rational> p = complex_truncation(rp, w);
  MatSpace<Rational> sl = p.kernel([&](const MatQ& m) -> Col<Rational> { return Col<Rational>::Constant(1, m.trace()); });
  EXPECT_EQ(pr.dim(), sl.dim());
}

TEST(RealParabolic, CompactLeviBlockOfSu1) {
  std::vector<RealBlock> blocks = real_levi(su1_line(), 4);
  ASSERT_FALSE(blocks.empty());
  EXPECT_TRUE(blocks[0].compact);
  EXPECT_TRUE(is_minimal_levi(blocks));
}

TEST(Man, SplitSl3) {
  RealStructure rs = make_real_form("sl(inf;R)");
  ParabolicDesc p = normalizer_of(rs.system, GenFlag::finite_chain(Side::V, rs.system, {fin({1}), fin({1, 2})}));
  RealParabolic rp = real_parabolic(p, rs);
  Window w = real_window(rs, 3);
  ManDecomp md = man_decompose(rp, w);
  EXPECT_TRUE(all_pass(md.certificate));
  EXPECT_EQ(md.m.dim(), 0u);
  EXPECT_EQ(md.a.dim(), 2u);
  EXPECT_EQ(md.n.dim(), 3u);
  RootOracle o = restricted_root_oracle(rs, w, md.a);
  EXPECT_EQ(o.dim_n, 3u);
  EXPECT_EQ(o.dim_g0, 2u);
}

TEST(Man, Su12) {
  RealParabolic rp = su1_line();
  Window w = real_window(rp.form, 3);
  ManDecomp md = man_decompose(rp, w);
  EXPECT_TRUE(all_pass(md.certificate));
  EXPECT_EQ(md.a.dim(), 1u);
  EXPECT_EQ(md.m.dim(), 1u);  // u(1)
  EXPECT_EQ(md.n.dim(), 3u);  // one root space of dim 2, one of dim 1
  for (const auto& x : md.m.basis()) EXPECT_EQ(theta(x), x);
  for (const auto& x : md.a.basis()) EXPECT_EQ(theta(x), MatG(-x));
}

TEST(Cartan, CoherentAcrossWindows) {
  CartanData c = cartan_involution(su1_line(), 3);
  EXPECT_TRUE(c.coherent);
  EXPECT_EQ(c.k.dim() + c.s.dim(), c.g.dim());
}

TEST(Dagger, MinimalSu1IsAFixedPoint) {
  RealParabolic rp = su1_line();
  DaggerResult d = construct_dagger(rp, 3);
  EXPECT_TRUE(all_pass(d.certificate));
  EXPECT_TRUE(d.fixed_point);
  ManDecomp md = man_decompose(rp, d.window);
  EXPECT_EQ(d.a_dagger, md.a);
  EXPECT_EQ(d.m_dagger, md.m);
}

TEST(Dagger, NeedsAHermitianForm) {
  RealStructure rs = make_real_form("sl(inf;R)");
  ParabolicDesc p = normalizer_of(rs.system, GenFlag::finite_chain(Side::V, rs.system, {fin({1})}));
  EXPECT_THROW(construct_dagger(real_parabolic(p, rs), 3), Error);
}
