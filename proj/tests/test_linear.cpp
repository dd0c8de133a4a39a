#include <gtest/gtest.h>

#include <random>

#include "flagpar/linear.hpp"

using namespace flagpar;

namespace {

std::vector<DualSystem> systems() {
  return {DualSystem::delta(IndexDomain::Nat), DualSystem::order_step(IndexDomain::Nat),
          DualSystem::symmetric(2, std::nullopt), DualSystem::alternating(std::nullopt, std::nullopt)};
}

FinOp random_op(std::mt19937& rng, int top) {
  FinOp op;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k) {
    op.add(Index::nat(1 + static_cast<int>(rng() % static_cast<unsigned>(top))),
           Index::nat(1 + static_cast<int>(rng() % static_cast<unsigned>(top))),
           Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2)));
  }
  return op;
}

Vec random_vec(std::mt19937& rng, int top) {
  Vec v;
  for (int k = 0; k < 3; ++k) v.add(Index::nat(1 + static_cast<int>(rng() % static_cast<unsigned>(top))), Rational(static_cast<int>(rng() % 5) - 2));
  return v;
}

}  // namespace

TEST(FinOp, CoefficientMapIsCanonical) {
  FinOp a = FinOp::rank_one(Index::nat(1), Index::nat(2), 3);
  a.add(Index::nat(1), Index::nat(2), -3);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(FinOp::rank_one(Index::nat(1), Index::nat(2)) + FinOp::rank_one(Index::nat(1), Index::nat(2)),
            FinOp::rank_one(Index::nat(1), Index::nat(2), 2));
}

TEST(FinOp, CompositionActsAsComposition) {
  std::mt19937 rng(41);
  for (const auto& s : systems()) {
    for (int c = 0; c < 80; ++c) {
      FinOp a = random_op(rng, 6), b = random_op(rng, 6);
      Vec x = random_vec(rng, 6);
      EXPECT_EQ(apply(s, compose(s, a, b), x), apply(s, a, apply(s, b, x))) << describe(s);
    }
  }
}

TEST(FinOp, BracketIsALieBracket) {
  std::mt19937 rng(42);
  for (const auto& s : systems()) {
    for (int c = 0; c < 60; ++c) {
      FinOp a = random_op(rng, 5), b = random_op(rng, 5), d = random_op(rng, 5);
      EXPECT_TRUE((bracket(s, a, b) + bracket(s, b, a)).is_zero());
      FinOp jac = bracket(s, a, bracket(s, b, d)) + bracket(s, b, bracket(s, d, a)) + bracket(s, d, bracket(s, a, b));
      EXPECT_TRUE(jac.is_zero()) << describe(s);
      EXPECT_EQ(trace(s, bracket(s, a, b)), 0);
    }
  }
}

TEST(FinOp, WindowMatricesFollowTheBracket) {
  std::mt19937 rng(43);
  const Window w = window(IndexDomain::Nat, 6);
  for (const auto& s : systems()) {
    const MatQ gt = s.gram(w).transpose();
    for (int c = 0; c < 60; ++c) {
      FinOp a = random_op(rng, 6), b = random_op(rng, 6);
      EXPECT_EQ(truncate(bracket(s, a, b), w), twisted_bracket(truncate(a, w), truncate(b, w), gt));
      EXPECT_EQ(from_coefficients(truncate(a, w), w), a);
    }
  }
}

TEST(FinOp, OperatorMatrixRoundTrip) {
  std::mt19937 rng(44);
  // even size so no symplectic pair is split
  const Window w = window(IndexDomain::Nat, 6);
  for (const auto& s : systems()) {
    if (determinant<Rational>(s.gram(w)) == 0) continue;  // order step pairs strictly
    for (int c = 0; c < 30; ++c) {
      FinOp a = random_op(rng, 5);
      EXPECT_EQ(from_operator_matrix(s, operator_matrix(s, a, w), w), a);
    }
  }
}

TEST(FinOp, TruncationOutsideTheWindowThrows) {
  EXPECT_THROW(truncate(FinOp::rank_one(Index::nat(1), Index::nat(9)), window(IndexDomain::Nat, 3)), SupportOutsideWindow);
}

TEST(Annihilator, PairsToZeroOnAWindow) {
  std::mt19937 rng(45);
  const Window w = window(IndexDomain::Nat, 10);
  for (const auto& s : systems()) {
    for (int c = 0; c < 40; ++c) {
      std::vector<Index> pts;
      for (int k = 0; k < 3; ++k) pts.push_back(Index::nat(1 + static_cast<int>(rng() % 8)));
      CutSet x = CutSet::finite(IndexDomain::Nat, pts);
      if (rng() % 2) x = x.unite(CutSet::greater(Index::nat(8)));
      CutSet ann = annihilator(s, Side::V, x);
      for (const auto& i : x.restrict_to(w))
        for (const auto& j : ann.restrict_to(w)) EXPECT_EQ(s.beta(i, j), 0) << describe(s);
      // closure is idempotent and contains x
      CutSet cl = closure(s, Side::V, x);
      EXPECT_TRUE(x.subset_of(cl));
      EXPECT_EQ(closure(s, Side::V, cl), cl);
    }
  }
}

TEST(Annihilator, DeltaIsTheComplement) {
  const DualSystem d = DualSystem::delta(IndexDomain::Nat);
  CutSet x = CutSet::nat_range(2, 4);
  EXPECT_EQ(annihilator(d, Side::V, x), x.complement());
}

TEST(Form, PartnersAndGram) {
  const DualSystem so = DualSystem::symmetric(2, 6);
  EXPECT_EQ(so.partner(Index::nat(1)), Index::nat(2));
  EXPECT_EQ(so.partner(Index::nat(4)), Index::nat(3));
  EXPECT_EQ(so.partner(Index::nat(5)), Index::nat(5));
  MatQ g = so.gram(window(IndexDomain::Nat, 6));
  EXPECT_EQ(g, MatQ(g.transpose()));
  const DualSystem sp = DualSystem::alternating(3, 6);
  MatQ h = sp.gram(window(IndexDomain::Nat, 6));
  EXPECT_EQ(h, MatQ(-h.transpose()));
}

TEST(Form, SkewAndSymmetricGenerators) {
  const DualSystem so = DualSystem::symmetric(std::nullopt, std::nullopt);
  const DualSystem sp = DualSystem::alternating(std::nullopt, std::nullopt);
  Vec a = Vec::basis(Side::V, Index::nat(1)), b = Vec::basis(Side::V, Index::nat(4));
  const Window w = window(IndexDomain::Nat, 4);
  // operator matrices of so are G-skew: M^T G + G M = 0
  for (const auto& [s, op] : {std::pair{so, skew(so, a, b)}, std::pair{sp, symm(sp, a, b)}}) {
    MatQ m = operator_matrix(s, op, w), g = s.gram(w);
    EXPECT_TRUE(is_zero<Rational>(MatQ(m.transpose() * g + g * m)));
  }
  EXPECT_THROW(skew(sp, a, b), MissingForm);
}
