#include <gtest/gtest.h>

#include <random>

#include "flagpar/levi.hpp"

using namespace flagpar;

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

ParabolicDesc gl_chain(int n, const std::vector<CutSet>& members) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat, n);
  return normalizer_of(d, GenFlag::finite_chain(Side::V, d, members));
}

MatQ from_rows(const std::vector<std::vector<int>>& r) {
  MatQ m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[i][j];
  return m;
}

}  // namespace

TEST(Levi, PlaneInGl5) {
  ParabolicDesc p = gl_chain(5, {fin({1, 2})});
  LeviDatum l = levi_of(p);
  ASSERT_EQ(l.blocks.size(), 2u);
  EXPECT_EQ(l.blocks[0].x, fin({1, 2}));
  EXPECT_EQ(l.blocks[1].x, fin({3, 4, 5}));
  EXPECT_FALSE(l.z.has_value());
  ChevalleyData c = chevalley_truncation(p, window(IndexDomain::Nat, 5));
  EXPECT_EQ(c.l.dim(), 3u + 8u);
  EXPECT_EQ(c.t.dim(), 2u);
  EXPECT_EQ(c.p_nil.dim(), 6u);
  EXPECT_TRUE(verify_chevalley(c).ok) << verify_chevalley(c).failure;
}

TEST(Levi, LinesGiveNoBlocks) {
  // the Borel of gl(3) has a trivial semisimple Levi part
  LeviDatum l = levi_of(gl_chain(3, {fin({1}), fin({1, 2})}));
  EXPECT_TRUE(l.blocks.empty());
}

TEST(Levi, DatumValidation) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  const Window w = window(IndexDomain::Nat, 6);
  EXPECT_NO_THROW(check_levi_datum({d, Ambient::GL, {{fin({1, 2}), fin({1, 2})}}, std::nullopt}, w));
  // sl of a line is zero
  EXPECT_THROW(check_levi_datum({d, Ambient::GL, {{fin({1}), fin({1})}}, std::nullopt}, w), Error);
  // overlapping blocks
  EXPECT_THROW(check_levi_datum({d, Ambient::GL, {{fin({1, 2}), fin({1, 2})}, {fin({2, 3}), fin({2, 3})}}, std::nullopt}, w), Error);
  const DualSystem so = DualSystem::symmetric(3, 6);
  // so of a plane is abelian
  EXPECT_THROW(check_levi_datum({so, Ambient::SO, {}, fin({5, 6})}, w), Error);
}

TEST(Levi, RoundTripThroughMaximalCouple) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  std::vector<LeviDatum> cases{
      {d, Ambient::GL, {{fin({1, 2, 3}), fin({1, 2, 3})}}, std::nullopt},
      {d, Ambient::GL, {{fin({2, 4}), fin({2, 4})}, {CutSet::greater_equal(Index::nat(6)), CutSet::greater_equal(Index::nat(6))}}, std::nullopt},
  };
  for (const auto& l : cases) {
    EXPECT_EQ(levi_of(make_parabolic(l.system, maximal_taut_couple(l))), l) << to_string(l);
  }
  const DualSystem sp = DualSystem::alternating(3, 6);
  LeviDatum s{sp, Ambient::SP, {{fin({1, 3}), fin({2, 4})}}, fin({5, 6})};
  EXPECT_EQ(levi_of(maximal_parabolic(s)), s);
}

TEST(Levi, BlockSpacesHaveTheRightDimension) {
  const DualSystem so = DualSystem::symmetric(4, 8);
  LeviDatum l{so, Ambient::SO, {{fin({1, 3}), fin({2, 4})}}, fin({5, 6, 7, 8})};
  const Window w = window(IndexDomain::Nat, 8);
  EXPECT_EQ(levi_block_space(l, 0, w).dim(), 3u);  // sl(2)
  EXPECT_EQ(levi_block_space(l, 1, w).dim(), 6u);  // so(4)
}

TEST(Jordan, KnownBlock) {
  auto [s, n] = jordan_matrix(from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, 3}}));
  EXPECT_EQ(s, from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  EXPECT_EQ(n, from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST(Jordan, RotationIsSemisimple) {
  // eigenvalues +-i: semisimple over Q though not diagonalizable there
  MatQ r = from_rows({{0, -1}, {1, 0}});
  auto [s, n] = jordan_matrix(r);
  EXPECT_EQ(s, r);
  EXPECT_TRUE(is_zero<Rational>(n));
}

TEST(Jordan, RandomMatricesSplit) {
  std::mt19937 rng(71);
  for (int c = 0; c < 40; ++c) {
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng() % 4);
    MatQ a(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) a(i, j) = Rational(static_cast<int>(rng() % 3) - 1);
    auto [s, n] = jordan_matrix(a);
    EXPECT_EQ(MatQ(s + n), a);
    EXPECT_TRUE(is_zero<Rational>(commutator<Rational>(s, n)));
    MatQ pw = identity<Rational>(k);
    for (Eigen::Index e = 0; e < k; ++e) pw = pw * n;
    EXPECT_TRUE(is_zero<Rational>(pw));
    Poly<Rational> mp = minimal_polynomial<Rational>(s);
    EXPECT_EQ(degree(poly_gcd(mp, derivative(mp))), 0);
  }
}

TEST(Jordan, SquarefreePart) {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  Poly<Rational> f{Rational(2), Rational(-3), Rational(0), Rational(1)};
  Poly<Rational> g = squarefree_part(f);
  EXPECT_EQ(degree(g), 2);
}

TEST(Jordan, FiniteRankOperator) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  FinOp op = FinOp::rank_one(Index::nat(1), Index::nat(1), 2) + FinOp::rank_one(Index::nat(1), Index::nat(2)) +
             FinOp::rank_one(Index::nat(2), Index::nat(2), 2);
  JordanParts j = jordan_decompose(d, op);
  EXPECT_EQ(j.ss + j.nil, op);
  EXPECT_EQ(j.nil, FinOp::rank_one(Index::nat(1), Index::nat(2)));
  EXPECT_TRUE(bracket(d, j.ss, j.nil).is_zero());
}
