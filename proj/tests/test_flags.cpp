#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "flagpar/flags.hpp"

using namespace flagpar;

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

// E_ij sends e_j to e_i under the delta pairing; check every member by hand.
bool preserves_by_hand(const std::vector<CutSet>& members, int i, int j) {
  for (const auto& m : members)
    if (m.contains(Index::nat(j)) && !m.contains(Index::nat(i))) return false;
  return true;
}

}  // namespace

TEST(GenFlag, FiniteChainAddsEndpoints) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  GenFlag f = GenFlag::finite_chain(Side::V, d, {fin({1, 2}), fin({1})});
  ASSERT_EQ(f.coarse().size(), 4u);
  EXPECT_TRUE(f.coarse().front().is_empty());
  EXPECT_TRUE(f.coarse().back().is_full());
  EXPECT_EQ(f.coarse()[1], fin({1}));
  EXPECT_TRUE(f.is_member(fin({1, 2})));
  EXPECT_FALSE(f.is_member(fin({2})));
}

TEST(GenFlag, ValidationRejectsNonNestedMembers) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  const Window w = window(IndexDomain::Nat, 4);
  EXPECT_TRUE(validate_chain(Side::V, d, {fin({1}), fin({1, 2})}, w).valid);
  ValidationReport r = validate_chain(Side::V, d, {fin({1, 2}), fin({2, 3})}, w);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.message.empty());
}

TEST(GenFlag, RefinedSchemasValidate) {
  const DualSystem rat = DualSystem::order_step(IndexDomain::Rat);
  const Window wr = window(IndexDomain::Rat, 0, {Index::rat(Rational(-1)), Index::rat(Rational(1, 2)), Index::rat(Rational(3))});
  EXPECT_TRUE(validate_genflag(rat, GenFlag::rational_cut(Side::V), wr).valid);
  const DualSystem cp = limit_ordinal_system();
  EXPECT_TRUE(validate_genflag(cp, GenFlag::column_schema(Side::V), window(IndexDomain::ColPair, 6)).valid);
}

TEST(GenFlag, RationalCutMembersNearAWindow) {
  GenFlag f = GenFlag::rational_cut(Side::V);
  const Window w = window(IndexDomain::Rat, 0, {Index::rat(Rational(0)), Index::rat(Rational(1))});
  for (const auto& m : f.members_near(w)) {
    EXPECT_TRUE(f.is_member(m)) << to_string(m);
    // every member is a down-set
    if (m.contains(Index::rat(Rational(1)))) EXPECT_TRUE(m.contains(Index::rat(Rational(0))));
  }
}

TEST(Stabilizer, RowsMatchHandCheckOnRandomChains) {
  std::mt19937 rng(51);
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  const Window w = window(IndexDomain::Nat, 5);
  for (int c = 0; c < 40; ++c) {
    std::vector<int> perm{1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<CutSet> members;
    for (int k = 1; k < 5; ++k)
      if (rng() % 2) members.push_back(fin({perm.begin(), perm.begin() + k}));
    GenFlag f = GenFlag::finite_chain(Side::V, d, members);
    auto rows = stabilizer_rows(d, f, w);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        MatQ e = truncate(FinOp::rank_one(Index::nat(i), Index::nat(j)), w);
        EXPECT_EQ(satisfies(rows, e), preserves_by_hand(members, i, j)) << i << "," << j;
      }
  }
}

TEST(Stabilizer, BorelOfGl3) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat, 3);
  GenFlag f = GenFlag::finite_chain(Side::V, d, {fin({1}), fin({1, 2})});
  EXPECT_EQ(solve_rows(3, stabilizer_rows(d, f, window(IndexDomain::Nat, 3))).dim(), 6u);
}

TEST(Semiclosed, OrderStepClosure) {
  // beta(v_i, w_j) = 1 for j < i: v_1 pairs to zero, so the closure of 0 is
  // {1} and the closure of {2} is {1, 2}
  const DualSystem os = DualSystem::order_step(IndexDomain::Nat);
  EXPECT_EQ(closure(os, Side::V, fin({2})), fin({1, 2}));
  EXPECT_EQ(closure(os, Side::V, CutSet::empty(IndexDomain::Nat)), fin({1}));
  const Window w = window(IndexDomain::Nat, 4);
  EXPECT_TRUE(is_semiclosed(os, GenFlag::finite_chain(Side::V, os, {fin({1}), fin({1, 2})}), w).holds);
  SemiclosedReport r = is_semiclosed(os, GenFlag::finite_chain(Side::V, os, {fin({2})}), w);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(Taut, LimitOrdinalCouple) {
  TautCouple c = example_limit_ordinal_couple();
  Verdict v = is_taut_couple(limit_ordinal_system(), c, 2);
  EXPECT_TRUE(v.holds) << v.detail;
}

TEST(Taut, DeltaChainWithItsAnnihilatorFlag) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  GenFlag f = GenFlag::finite_chain(Side::V, d, {fin({1, 2}), fin({1, 2, 3, 4})});
  TautCouple c{f, dual_flag(d, f), std::nullopt};
  EXPECT_TRUE(is_taut_couple(d, c, 3).holds);
  // pairing it with an unrelated W flag breaks tautness
  TautCouple bad{f, GenFlag::finite_chain(Side::W, d, {fin({5})}), std::nullopt};
  Verdict v = is_taut_couple(d, bad, 3);
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(v.witness.has_value());
}

TEST(SelfTaut, IsotropyClasses) {
  const DualSystem so = DualSystem::symmetric(3, 6);
  EXPECT_EQ(classify(so, fin({1, 3})), Isotropy::Isotropic);
  EXPECT_EQ(classify(so, fin({1, 3, 5, 6})), Isotropy::Coisotropic);
  EXPECT_EQ(classify(so, fin({1, 2})), Isotropy::Neither);
  GenFlag good = GenFlag::finite_chain(Side::V, so, {fin({1, 3}), fin({1, 3, 5, 6})});
  EXPECT_TRUE(is_selftaut(so, good, 2).verdict.holds);
  // without L^perp in the chain the gl stabilizer of L moves L^perp
  SelfTautVerdict v = is_selftaut(so, GenFlag::finite_chain(Side::V, so, {fin({1, 3})}), 1);
  EXPECT_FALSE(v.verdict.holds);
  EXPECT_TRUE(v.verdict.witness.has_value());
  ASSERT_EQ(v.classes.size(), 3u);
  EXPECT_EQ(v.classes[1], Isotropy::Isotropic);
}
