#include <gtest/gtest.h>

#include <random>
#include <set>

#include "flagpar/cutset.hpp"
#include "flagpar/matrix.hpp"
#include "flagpar/sexpr.hpp"

using namespace flagpar;

namespace {

// Finite unions of points and rays inside {1..30}; rays are read as running
// to infinity, so membership past 30 is decided by the ray alone.
struct Model {
  std::set<int> pts;
  int ray = 0;  // {n >= ray} when positive
  bool has(int n) const { return pts.count(n) || (ray > 0 && n >= ray); }
};

CutSet build(const Model& m) {
  std::vector<Index> p;
  for (int x : m.pts) p.push_back(Index::nat(x));
  CutSet s = CutSet::finite(IndexDomain::Nat, p);
  if (m.ray > 0) s = s.unite(CutSet::greater_equal(Index::nat(m.ray)));
  return s;
}

Model random_model(std::mt19937& rng) {
  Model m;
  const int k = static_cast<int>(rng() % 6);
  for (int i = 0; i < k; ++i) m.pts.insert(1 + static_cast<int>(rng() % 25));
  if (rng() % 2) m.ray = 1 + static_cast<int>(rng() % 28);
  return m;
}

}  // namespace

TEST(Rational, ExactArithmetic) {
  Rational a = parse_rational("1/3"), b = parse_rational("-2/6");
  EXPECT_EQ(a + b, 0);
  EXPECT_EQ(a * 3, 1);
  EXPECT_EQ(to_string(a / b), "-1");
}

TEST(Gaussian, FieldOperations) {
  GaussianQ z(Rational(1), Rational(2)), w(Rational(3), Rational(-1));
  EXPECT_EQ(z * w, GaussianQ(Rational(5), Rational(5)));
  EXPECT_EQ((z / w) * w, z);
  EXPECT_EQ(GaussianQ::i() * GaussianQ::i(), GaussianQ(-1));
  EXPECT_THROW(z / GaussianQ(0), std::domain_error);
}

TEST(Index, OrdersPerDomain) {
  EXPECT_LT(Index::nat(2), Index::nat(5));
  EXPECT_LT(Index::rat(Rational(-1, 2)), Index::rat(Rational(1, 3)));
  // column pairs run down a column before moving right
  EXPECT_LT(Index::colpair(7, 1), Index::colpair(1, 2));
  EXPECT_LT(Index::colpair(1, 2), Index::colpair(2, 2));
  EXPECT_THROW((void)(Index::nat(1) < Index::rat(Rational(1))), DomainMismatch);
}

TEST(Index, NeighboursOnlyInDiscreteDomains) {
  EXPECT_EQ(*successor(Index::nat(4)), Index::nat(5));
  EXPECT_FALSE(predecessor(Index::nat(1)).has_value());
  EXPECT_FALSE(successor(Index::rat(Rational(1, 2))).has_value());
  auto mid = element_between(Index::rat(Rational(0)), Index::rat(Rational(1)));
  ASSERT_TRUE(mid.has_value());
  EXPECT_LT(Index::rat(Rational(0)), *mid);
  EXPECT_LT(*mid, Index::rat(Rational(1)));
}

TEST(CutSet, BooleanAlgebraMatchesPointModel) {
  std::mt19937 rng(31);
  for (int c = 0; c < 300; ++c) {
    Model a = random_model(rng), b = random_model(rng);
    CutSet x = build(a), y = build(b);
    CutSet u = x.unite(y), i = x.intersect(y), d = x.minus(y), n = x.complement();
    for (int k = 1; k <= 40; ++k) {
      Index p = Index::nat(k);
      ASSERT_EQ(u.contains(p), a.has(k) || b.has(k));
      ASSERT_EQ(i.contains(p), a.has(k) && b.has(k));
      ASSERT_EQ(d.contains(p), a.has(k) && !b.has(k));
      ASSERT_EQ(n.contains(p), !a.has(k));
    }
    EXPECT_EQ(x.complement().complement(), x);
    EXPECT_EQ(x.subset_of(y), x.minus(y).is_empty());
    EXPECT_EQ(x.cardinality().has_value(), a.ray == 0);
  }
}

TEST(CutSet, ParsePrintRoundTrip) {
  std::mt19937 rng(32);
  for (int c = 0; c < 100; ++c) {
    CutSet x = build(random_model(rng));
    EXPECT_EQ(parse_cutset(to_string(x)), x) << to_string(x);
  }
  CutSet q = CutSet::less(Index::rat(Rational(1, 2)));
  EXPECT_EQ(parse_cutset(to_string(q)), q);
  EXPECT_TRUE(q.contains(Index::rat(Rational(0))));
  EXPECT_FALSE(q.contains(Index::rat(Rational(1, 2))));
}

TEST(Sexp, ReportsPositions) {
  Sexp e = parse_sexp("(a (b c) d)");
  ASSERT_TRUE(e.head_is("a"));
  EXPECT_EQ(e.items.size(), 3u);
  EXPECT_EQ(e.items[1].items[1].atom, "c");
  EXPECT_THROW(parse_sexp("(a (b"), ParseError);
  EXPECT_THROW(parse_sexp("(a) b"), ParseError);
}

TEST(Matrix, RankNullityAndInverse) {
  std::mt19937 rng(33);
  for (int c = 0; c < 60; ++c) {
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng() % 5), k = 1 + static_cast<Eigen::Index>(rng() % 5);
    MatQ m(r, k);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < k; ++j) m(i, j) = Rational(static_cast<int>(rng() % 5) - 2);
    MatQ ns = nullspace<Rational>(m);
    EXPECT_EQ(rank<Rational>(m) + ns.cols(), k);
    EXPECT_TRUE(is_zero<Rational>(MatQ(m * ns)));
    if (r == k && determinant<Rational>(m) != 0) {
      EXPECT_EQ(MatQ(m * inverse<Rational>(m)), identity<Rational>(r));
    }
  }
}

TEST(Matrix, GaussianAdjoint) {
  MatG m(2, 2);
  m << GaussianQ(Rational(1), Rational(1)), GaussianQ(2), GaussianQ(0), GaussianQ(Rational(0), Rational(-3));
  MatG a = adjoint<GaussianQ>(m);
  EXPECT_EQ(a(0, 0), GaussianQ(Rational(1), Rational(-1)));
  EXPECT_EQ(a(1, 0), GaussianQ(2));
  EXPECT_EQ(adjoint<GaussianQ>(a), m);
}
