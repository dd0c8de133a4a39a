#include <random>

#include "flagpar/levi.hpp"
#include "flagpar/suite.hpp"

namespace flagpar::battery {

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

struct KnownJordan {
  MatQ s, n;  // before conjugation
};

/// Blocks with eigenvalues in Q or in conjugate pairs of Q(i), realized over
/// Q; ss and nil parts are known by construction.
KnownJordan random_structure(std::mt19937& rng, Eigen::Index size) {
  KnownJordan k{zeros<Rational>(size, size), zeros<Rational>(size, size)};
  Eigen::Index at = 0;
  auto small = [&](int lo, int hi) { return Rational(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1))); };
  while (at < size) {
    const Eigen::Index left = size - at;
    if (left >= 2 && rng() % 3 == 0) {
      // a +- bi, once or twice with a nilpotent coupling
      Rational a = small(-3, 3), b = small(1, 3);
      const Eigen::Index reps = left >= 4 && rng() % 2 ? 2 : 1;
      for (Eigen::Index r = 0; r < reps; ++r) {
        const Eigen::Index o = at + 2 * r;
        k.s(o, o) = a;
        k.s(o + 1, o + 1) = a;
        k.s(o, o + 1) = -b;
        k.s(o + 1, o) = b;
        if (r > 0) {
          k.n(o - 2, o) = 1;
          k.n(o - 1, o + 1) = 1;
        }
      }
      at += 2 * reps;
    } else {
      Rational lambda = small(-3, 3);
      const Eigen::Index len = 1 + static_cast<Eigen::Index>(rng() % static_cast<unsigned>(left));
      for (Eigen::Index r = 0; r < len; ++r) {
        k.s(at + r, at + r) = lambda;
        if (r > 0) k.n(at + r - 1, at + r) = 1;
      }
      at += len;
    }
  }
  return k;
}

MatQ random_invertible(std::mt19937& rng, Eigen::Index size) {
  while (true) {
    MatQ p(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
      for (Eigen::Index j = 0; j < size; ++j) p(i, j) = Rational(static_cast<int>(rng() % 5) - 2);
    if (determinant<Rational>(p) != 0) return p;
  }
}

}  // namespace

std::pair<bool, std::string> jordan_oracle() {
  std::mt19937 rng(4711);
  const DualSystem sys = DualSystem::delta(IndexDomain::Nat);
  for (int c = 0; c < 100; ++c) {
    const auto size = static_cast<Eigen::Index>(1 + rng() % 5);
    const Window w = window(IndexDomain::Nat, static_cast<std::size_t>(size));
    KnownJordan k = random_structure(rng, size);
    MatQ p = random_invertible(rng, size);
    MatQ pinv = inverse<Rational>(p);
    MatQ s = p * k.s * pinv, n = p * k.n * pinv;
    FinOp op = from_coefficients(MatQ(s + n), w);
    JordanParts j = jordan_decompose(sys, op);
    const std::string tag = "case " + std::to_string(c) + ": ";
    if (!(j.ss + j.nil == op)) return {false, tag + "ss + nil differs from the operator"};
    if (!bracket(sys, j.ss, j.nil).is_zero()) return {false, tag + "ss and nil do not commute"};
    MatQ ms = truncate(j.ss, w), mn = truncate(j.nil, w);
    MatQ pw = identity<Rational>(size);
    for (Eigen::Index e = 0; e < size; ++e) pw = pw * mn;
    if (!is_zero<Rational>(pw)) return {false, tag + "nil is not nilpotent"};
    Poly<Rational> mp = minimal_polynomial<Rational>(ms);
    if (degree(poly_gcd(mp, derivative(mp))) > 0) return {false, tag + "ss has a repeated root in its minimal polynomial"};
    if (!(ms == s) || !(mn == n)) return {false, tag + "disagrees with the splitting-field construction"};
  }
  return {true, "100 operators"};
}

std::pair<bool, std::string> levi_round_trip() {
  const auto d = DualSystem::delta(IndexDomain::Nat);
  const auto cp = DualSystem::delta(IndexDomain::ColPair);
  const auto so8 = DualSystem::symmetric(4, 8), so6 = DualSystem::symmetric(3, 6);
  const auto so2 = DualSystem::symmetric(2, std::nullopt);
  const auto sp6 = DualSystem::alternating(3, 6), spi = DualSystem::alternating(std::nullopt, std::nullopt);
  auto ge = [](int k) { return CutSet::greater_equal(Index::nat(k)); };
  const std::vector<LeviDatum> catalog{
      {d, Ambient::GL, {{fin({1, 2}), fin({1, 2})}}, std::nullopt},
      {d, Ambient::GL, {{fin({1, 2}), fin({1, 2})}, {fin({3, 4, 5}), fin({3, 4, 5})}}, std::nullopt},
      {d, Ambient::GL, {{d.universe(), d.universe()}}, std::nullopt},
      {d, Ambient::GL, {{ge(3), ge(3)}}, std::nullopt},
      {d, Ambient::GL, {{fin({1, 2}), fin({1, 2})}, {ge(4), ge(4)}}, std::nullopt},
      {cp, Ambient::GL, {{CutSet::column(1), CutSet::column(1)}}, std::nullopt},
      {cp, Ambient::GL, {{CutSet::column(1), CutSet::column(1)}, {CutSet::column(3), CutSet::column(3)}}, std::nullopt},
      {so8, Ambient::SO, {{fin({1, 3}), fin({2, 4})}}, fin({5, 6, 7, 8})},
      {so6, Ambient::SO, {}, so6.universe()},
      {so2, Ambient::SO, {{fin({1, 3}), fin({2, 4})}}, ge(5)},
      {sp6, Ambient::SP, {{fin({1, 3}), fin({2, 4})}}, fin({5, 6})},
      {spi, Ambient::SP, {{fin({1, 3, 5}), fin({2, 4, 6})}}, ge(7)},
  };
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const LeviDatum& l = catalog[k];
    check_levi_datum(l, window(l.system.domain, 8));
    LeviDatum back = l.system.has_form() ? levi_of(maximal_parabolic(l))
                                         : levi_of(make_parabolic(l.system, maximal_taut_couple(l)));
    if (!(back == l)) return {false, "entry " + std::to_string(k) + ": " + to_string(l) + " came back as " + to_string(back)};
  }
  return {true, std::to_string(catalog.size()) + " Levi data"};
}

}  // namespace flagpar::battery
