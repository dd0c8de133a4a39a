#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "flagpar/induce.hpp"

using namespace flagpar;

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

RealParabolic split_borel(int n) {
  RealStructure rs = make_real_form("sl(inf;R)");
  std::vector<CutSet> members;
  for (int k = 1; k < n; ++k) members.push_back(CutSet::nat_range(1, k));
  return real_parabolic(normalizer_of(rs.system, GenFlag::finite_chain(Side::V, rs.system, members)), rs);
}

RealParabolic su1_line() {
  RealStructure rs = make_real_form("su(1,inf)");
  GenFlag f = GenFlag::finite_chain(Side::V, rs.system, {fin({1}), tau_member(rs, fin({1}))});
  return real_parabolic(normalizer_of(rs.system, f), rs);
}

MatG diag(const std::vector<Rational>& d) {
  MatG m = zeros<GaussianQ>(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = GaussianQ(d[i]);
  return m;
}

}  // namespace

TEST(Induce, Sl2VermaFormula) {
  RealParabolic rp = split_borel(2);
  Window w = real_window(rp.form, 2);
  InducedModule mod = induced_module(rp, w, CharacterSpec{{Rational(3, 2)}, std::nullopt}, 5);
  ASSERT_EQ(mod.n_minus.size(), 1u);
  EXPECT_EQ(mod.graded_dims(), (std::vector<std::size_t>{1, 1, 1, 1, 1, 1}));
  MatG f = to_gaussian(mod.n_minus[0]);
  MatG e = MatG(f.transpose());
  ModuleVector hv = mod.apply(commutator<GaussianQ>(e, f), mod.basis_vector({}));
  ASSERT_TRUE(hv.count({}));
  const GaussianQ lambda = hv.at({})(0, 0);
  // the a-character is imaginary: lambda = i sigma up to the normalization of h
  EXPECT_EQ(lambda.re, 0);
  EXPECT_NE(lambda.im, 0);
  for (int k = 1; k <= 5; ++k) {
    ModuleVector ref;
    ref[Monomial(static_cast<std::size_t>(k - 1), 0)] = MatG::Constant(1, 1, GaussianQ(k) * (lambda - GaussianQ(k - 1)));
    EXPECT_TRUE(same_vector(mod.apply(e, mod.basis_vector(Monomial(static_cast<std::size_t>(k), 0))), ref)) << k;
  }
}

TEST(Induce, Sl3GradedDimensions) {
  RealParabolic rp = split_borel(3);
  InducedModule mod = induced_module(rp, real_window(rp.form, 3), CharacterSpec{{Rational(1), Rational(0)}, std::nullopt}, 4);
  EXPECT_EQ(mod.graded_dims(), (std::vector<std::size_t>{1, 3, 6, 10, 15}));
  EXPECT_EQ(mod.generators.size(), mod.n_minus.size() + mod.p_basis.size());
  EXPECT_TRUE(check_bracket_fidelity(mod));
}

TEST(Induce, ActFlagsOverflowingColumns) {
  RealParabolic rp = split_borel(2);
  InducedModule mod = induced_module(rp, real_window(rp.form, 2), CharacterSpec{{Rational(0)}, std::nullopt}, 3);
  std::vector<bool> over;
  MatG f = to_gaussian(mod.n_minus[0]);
  mod.act(f, &over);
  // f raises the degree: only the top column leaves the bound
  EXPECT_EQ(std::count(over.begin(), over.end(), true), 1);
  EXPECT_TRUE(over.back());
}

TEST(Induce, AdTwistOnSu12) {
  std::mt19937 rng(91);
  RealParabolic rp = su1_line();
  Window w = real_window(rp.form, 3);
  InducedModule mod = induced_module(rp, w, CharacterSpec{{Rational(1, 2)}, std::nullopt}, 3);
  EXPECT_EQ(mod.graded_dims(), (std::vector<std::size_t>{1, 3, 6, 10}));
  EXPECT_TRUE(check_bracket_fidelity(mod));
  const int r = static_cast<int>(mod.n_minus.size());
  for (int t = 0; t < 30; ++t) {
    MatG xi = zeros<GaussianQ>(static_cast<Eigen::Index>(w.size()), static_cast<Eigen::Index>(w.size()));
    for (const auto& b : mod.p_basis) xi += to_gaussian(b) * GaussianQ(Rational(static_cast<int>(rng() % 5) - 2));
    Monomial eta;
    for (std::size_t k = 0; k < rng() % 3; ++k) eta.push_back(static_cast<int>(rng() % static_cast<unsigned>(r)));
    std::sort(eta.begin(), eta.end());
    EXPECT_TRUE(check_ad_twist(mod, xi, eta)) << t;
  }
}

TEST(Character, RejectsWrongSizes) {
  RealParabolic rp = su1_line();
  ManDecomp md = man_decompose(rp, real_window(rp.form, 3));
  EXPECT_THROW(check_character(md, CharacterSpec{{Rational(1), Rational(2)}, std::nullopt}), Error);
  EXPECT_NO_THROW(check_character(md, CharacterSpec{{Rational(1)}, std::nullopt}));
  // a one-dimensional kappa must vanish on brackets; u(1) is abelian so any scalar works
  ASSERT_EQ(md.m.dim(), 1u);
  EXPECT_NO_THROW(check_character(md, CharacterSpec{{Rational(1)}, std::vector<MatG>{MatG::Constant(1, 1, GaussianQ(Rational(0), Rational(3)))}}));
}

TEST(Character, PCharacterOnA) {
  RealParabolic rp = su1_line();
  ManDecomp md = man_decompose(rp, real_window(rp.form, 3));
  CharacterSpec spec{{Rational(5)}, std::nullopt};
  MatG eta = p_character(md, spec, md.a.basis()[0]);
  EXPECT_EQ(eta, MatG::Constant(1, 1, GaussianQ(Rational(0), Rational(5))));
}

TEST(PsiB, DiagonalCase) {
  MatG b = diag({Rational(1, 2), Rational(1, 3)}), x = diag({Rational(2), Rational(3)});
  EXPECT_EQ(psi_b(b, x), GaussianQ(Rational(5, 2)));
  EXPECT_EQ(psi_b(b, identity<GaussianQ>(2)), GaussianQ(1));
  EXPECT_THROW(psi_b(b, identity<GaussianQ>(3)), SizeMismatch);
}

TEST(PsiB, HermitianContraction) {
  EXPECT_TRUE(is_hermitian_contraction(diag({Rational(0), Rational(1), Rational(1, 2)})));
  EXPECT_FALSE(is_hermitian_contraction(diag({Rational(3, 2)})));
  EXPECT_FALSE(is_hermitian_contraction(diag({Rational(-1, 2)})));
  MatG offdiag(2, 2);
  offdiag << GaussianQ(Rational(1, 2)), GaussianQ(Rational(0), Rational(1, 2)), GaussianQ(Rational(0), Rational(-1, 2)), GaussianQ(Rational(1, 2));
  EXPECT_TRUE(is_hermitian_contraction(offdiag));  // eigenvalues 0 and 1
  offdiag(0, 1) = GaussianQ(Rational(1));
  EXPECT_FALSE(is_hermitian_contraction(offdiag));  // not hermitian
}

TEST(Voiculescu, KnownSequences) {
  EXPECT_TRUE(voiculescu_check({{0, Rational(1)}}, 4));
  EXPECT_TRUE(voiculescu_check({{3, Rational(1)}}, 4));
  EXPECT_TRUE(voiculescu_check({{0, Rational(1, 2)}, {1, Rational(1, 2)}}, 4));
  EXPECT_FALSE(voiculescu_check({{0, Rational(2)}}, 4));
  EXPECT_FALSE(voiculescu_check({{0, Rational(2)}, {1, Rational(-1)}}, 4));
}
