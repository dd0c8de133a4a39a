#include <gtest/gtest.h>

#include <random>

#include "flagpar/parabolic.hpp"

using namespace flagpar;

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

ParabolicDesc gl_chain(int n, const std::vector<CutSet>& members, std::vector<TraceRow> rows = {}) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat, n);
  return normalizer_of(d, GenFlag::finite_chain(Side::V, d, members), std::move(rows));
}

}  // namespace

TEST(Parabolic, Gl3Dimensions) {
  const Window w = window(IndexDomain::Nat, 3);
  EXPECT_EQ(stabilizer_truncation(gl_chain(3, {}), w).dim(), 9u);
  EXPECT_EQ(stabilizer_truncation(gl_chain(3, {fin({1})}), w).dim(), 7u);
  EXPECT_EQ(stabilizer_truncation(gl_chain(3, {fin({1, 2})}), w).dim(), 7u);
  EXPECT_EQ(stabilizer_truncation(gl_chain(3, {fin({1}), fin({1, 2})}), w).dim(), 6u);
}

TEST(Parabolic, TotalTraceRowCutsOneDimension) {
  const Window w = window(IndexDomain::Nat, 3);
  ParabolicDesc b = gl_chain(3, {fin({1}), fin({1, 2})}, {TraceRow{{"total", Rational(1)}}});
  MatSpace<Rational> t = stabilizer_truncation(b, w);
  EXPECT_EQ(t.dim(), 5u);
  for (const auto& m : t.basis()) EXPECT_EQ(trace(b.system, from_coefficients(m, w)), 0);
}

TEST(Parabolic, UnknownBlockIdThrows) {
  EXPECT_THROW(block_by_id(gl_chain(3, {fin({1})}), "nonsense"), Error);
}

TEST(Parabolic, MembershipAgreesWithTruncation) {
  std::mt19937 rng(61);
  ParabolicDesc p = gl_chain(4, {fin({2}), fin({2, 4})});
  const Window w = window(IndexDomain::Nat, 4);
  MatSpace<Rational> t = stabilizer_truncation(p, w);
  for (int c = 0; c < 100; ++c) {
    FinOp op;
    for (int k = 0; k < 2; ++k)
      op.add(Index::nat(1 + static_cast<int>(rng() % 4)), Index::nat(1 + static_cast<int>(rng() % 4)), Rational(1 + static_cast<int>(rng() % 3)));
    EXPECT_EQ(stabilizer_contains(op, p), t.contains(truncate(op, w))) << to_string(op);
  }
}

TEST(Parabolic, TruncationsAreSubalgebras) {
  std::mt19937 rng(62);
  for (int c = 0; c < 20; ++c) {
    std::vector<CutSet> members;
    std::vector<int> acc;
    for (int k = 1; k <= 4; ++k) {
      acc.push_back(k);
      if (rng() % 2) members.push_back(fin(acc));
    }
    ParabolicDesc p = gl_chain(5, members);
    const Window w = window(IndexDomain::Nat, 5);
    EXPECT_TRUE(is_closed_under_bracket(p.system, w, stabilizer_truncation(p, w)));
  }
}

TEST(Solvable, BorelVersusLargerParabolic) {
  EXPECT_TRUE(is_locally_solvable(gl_chain(3, {fin({1}), fin({1, 2})}), 3).solvable);
  SolvableVerdict v = is_locally_solvable(gl_chain(3, {fin({1})}), 3);
  EXPECT_FALSE(v.solvable);
  ASSERT_GE(v.derived_dims.size(), 2u);
  EXPECT_EQ(v.derived_dims.front(), 7u);
}

TEST(Solvable, DerivedAlgebraOfGl2IsSl2) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat, 2);
  const Window w = window(IndexDomain::Nat, 2);
  MatSpace<Rational> gl2 = stabilizer_truncation(gl_chain(2, {}), w);
  MatSpace<Rational> der = derived_window(d, w, gl2);
  EXPECT_EQ(der.dim(), 3u);
  EXPECT_EQ(derived_window(d, w, der), der);
}

TEST(Solvable, RationalBorelWindows) {
  ParabolicDesc rb = example_rational_borel();
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(is_locally_solvable(rb, n).solvable) << n;
}

TEST(SoAmbiguity, ThreeFlagsOneParabolic) {
  const DualSystem so = DualSystem::symmetric(3, 6);
  GenFlag base = GenFlag::finite_chain(Side::V, so, {fin({1, 3}), fin({1, 3, 5, 6})});
  Ambiguity a = so_flag_ambiguity(so, base);
  ASSERT_FALSE(a.unique);
  ASSERT_EQ(a.flags.size(), 3u);
  const Window w = window(IndexDomain::Nat, 6);
  MatSpace<Rational> s0 = stabilizer_truncation(make_selftaut_parabolic(so, a.flags[0], Ambient::SO), w);
  for (const auto& f : a.flags) EXPECT_EQ(stabilizer_truncation(make_selftaut_parabolic(so, f, Ambient::SO), w), s0);
  EXPECT_THROW(so_flag_ambiguity(DualSystem::alternating(3, 6), base), MissingForm);
}

TEST(SelfTaut, SymplecticBorelDimension) {
  // Borel of sp(4): dim 6
  const DualSystem sp = DualSystem::alternating(2, 4);
  GenFlag f = GenFlag::finite_chain(Side::V, sp, {fin({1}), fin({1, 3}), fin({1, 3, 4})});
  const Window w = window(IndexDomain::Nat, 4);
  EXPECT_EQ(stabilizer_truncation(make_selftaut_parabolic(sp, f, Ambient::SP), w).dim(), 6u);
  EXPECT_THROW(make_selftaut_parabolic(sp, GenFlag::finite_chain(Side::V, sp, {fin({1})}), Ambient::SP), Error);
}
