#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "flagpar/levi.hpp"
#include "flagpar/suite.hpp"

namespace flagpar::battery {

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

std::string key_of(const std::vector<CutSet>& members) {
  std::string k;
  for (const auto& m : members) k += to_string(m);
  return k;
}

}  // namespace

std::pair<bool, std::string> stabilizer_oracle() {
  std::mt19937 rng(1905);
  const DualSystem sys = DualSystem::delta(IndexDomain::Nat);
  std::size_t flags = 0, ops = 0;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    for (int attempt = 0; attempt < 400 && seen.size() < 32; ++attempt) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> cuts;
      for (int k = 1; k <= n; ++k)
        if (rng() % 2) cuts.push_back(k);
      std::vector<CutSet> members;
      for (int k : cuts) members.push_back(fin({perm.begin(), perm.begin() + k}));
      if (rng() % 2) {
        int j = cuts.empty() ? 0 : cuts.back();
        j += static_cast<int>(rng() % static_cast<unsigned>(n - j + 1));
        members.push_back(fin({perm.begin(), perm.begin() + j}).unite(CutSet::greater(Index::nat(n))));
      }
      if (!seen.insert(key_of(members)).second) continue;
      ++flags;
      ParabolicDesc p = normalizer_of(sys, GenFlag::finite_chain(Side::V, sys, members));
      Window w = extend_window(p, window(IndexDomain::Nat, static_cast<std::size_t>(n)));
      MatSpace<Rational> t = stabilizer_truncation(p, w);
      std::vector<FinOp> span;
      for (const auto& i : w.indices)
        for (const auto& j : w.indices) span.push_back(FinOp::rank_one(i, j));
      for (int r = 0; r < 8; ++r) {
        FinOp op;
        for (int k = 0; k < 3; ++k) {
          const auto& i = w.indices[rng() % w.size()];
          const auto& j = w.indices[rng() % w.size()];
          op.add(i, j, Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
        }
        span.push_back(op);
      }
      for (const auto& op : span) {
        ++ops;
        if (stabilizer_contains(op, p) != t.contains(truncate(op, w))) {
          return {false, "flag " + key_of(members) + " disagrees on " + to_string(op)};
        }
      }
    }
  }
  return {true, std::to_string(flags) + " flags, " + std::to_string(ops) + " operators"};
}

std::pair<bool, std::string> gl4_parabolic_count() {
  const DualSystem sys = DualSystem::delta(IndexDomain::Nat, 4);
  const Window w = window(IndexDomain::Nat, 4);
  const std::vector<CutSet> full{fin({1}), fin({1, 2}), fin({1, 2, 3})};
  std::vector<MatSpace<Rational>> spaces;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<CutSet> members;
    for (int k = 0; k < 3; ++k)
      if (mask & (1 << k)) members.push_back(full[static_cast<std::size_t>(k)]);
    spaces.push_back(stabilizer_truncation(normalizer_of(sys, GenFlag::finite_chain(Side::V, sys, members)), w));
  }
  const MatSpace<Rational>& borel = spaces.back();
  if (borel.dim() != 10) return {false, "Borel truncation has dim " + std::to_string(borel.dim())};
  std::vector<const MatSpace<Rational>*> distinct;
  for (const auto& s : spaces) {
    if (!borel.subset_of(s)) return {false, "a stabilizer misses the Borel"};
    if (std::none_of(distinct.begin(), distinct.end(), [&](const auto* d) { return *d == s; })) distinct.push_back(&s);
  }
  return {distinct.size() == 8, std::to_string(distinct.size()) + " distinct stabilizers"};
}

std::pair<bool, std::string> rational_borel() {
  std::mt19937 rng(1729);
  ParabolicDesc rb = example_rational_borel();
  const DualSystem& sys = rb.system;
  auto q = [](int a, int b) { return Index::rat(Rational(a, b)); };
  if (!stabilizer_contains(FinOp::rank_one(q(1, 3), q(1, 2)), rb) || stabilizer_contains(FinOp::rank_one(q(1, 2), q(1, 3)), rb)) {
    return {false, "membership of v_q (x) w_r does not follow q <= r"};
  }
  std::size_t windows = 0;
  for (int set = 0; set < 20; ++set) {
    std::vector<Index> pts;
    while (pts.size() < 8) {
      Index x = q(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 6));
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    for (std::size_t k = 1; k <= pts.size(); ++k) {
      Window w = window(IndexDomain::Rat, 0, std::vector<Index>(pts.begin(), pts.begin() + static_cast<long>(k)));
      MatSpace<Rational> t = stabilizer_truncation(rb, w);
      ++windows;
      if (!is_solvable_on(sys, w, t).solvable) return {false, "truncation on window " + std::to_string(set) + " is not solvable"};
      for (const auto& b : t.basis()) {
        FinOp op = from_coefficients(b, w);
        if (trace(sys, op) != 0) return {false, "generator " + to_string(op) + " has nonzero trace"};
      }
    }
  }
  return {true, std::to_string(windows) + " windows"};
}

std::pair<bool, std::string> so6_trichotomy() {
  const DualSystem so = DualSystem::symmetric(3, 6);
  const Window w = window(IndexDomain::Nat, 6);
  const CutSet l = fin({1, 3});
  GenFlag base = GenFlag::finite_chain(Side::V, so, {l, annihilator(so, Side::V, l)});
  Ambiguity amb = so_flag_ambiguity(so, base);
  if (amb.unique || amb.flags.size() != 3) return {false, std::to_string(amb.flags.size()) + " flags returned"};
  std::vector<MatSpace<Rational>> s;
  for (const auto& f : amb.flags) s.push_back(stabilizer_truncation(make_selftaut_parabolic(so, f, Ambient::SO), w));
  if (!(s[0] == s[1]) || !(s[0] == s[2])) return {false, "the three stabilizers differ"};
  std::size_t same = 0, scanned = 0;
  for (const auto& f : aligned_selftaut_flags(so)) {
    ++scanned;
    if (stabilizer_truncation(make_selftaut_parabolic(so, f, Ambient::SO), w) == s[0]) ++same;
  }
  return {same == 3, std::to_string(same) + " of " + std::to_string(scanned) + " aligned self-taut flags share the stabilizer"};
}

}  // namespace flagpar::battery
