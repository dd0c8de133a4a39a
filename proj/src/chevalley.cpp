#include "flagpar/levi.hpp"

#include <map>

namespace flagpar {

ChevalleyData chevalley_truncation(const ParabolicDesc& p, const Window& w) {
  const DualSystem& sys = p.system;
  if (sys.kernel == Kernel::OrderStep) {
    throw UnsupportedKernel("the order-step Gram matrix is singular; window operators are not faithful");
  }
  const auto n = static_cast<Eigen::Index>(w.size());
  MatQ gt = sys.gram(w).transpose();
  ChevalleyData c{w, MatSpace<Rational>(n), {}, {}, {}, {}, {}};
  MatSpace<Rational> coeffs = stabilizer_truncation(p, w);
  for (const auto& b : coeffs.basis()) c.p.add(MatQ(b * gt));
  c.radical = solvable_radical(c.p);
  c.p_nil = nilpotent_part(c.radical);

  MatSpace<Rational> torus = c.p.kernel([&](const MatQ& m) -> Col<Rational> {
    Col<Rational> off(n * n);
    Eigen::Index t = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) off(t++) = m(i, j);
    return Col<Rational>(off.head(t));
  });
  // Split p into weight spaces for the diagonal torus; keep weights whose negative also occurs.
  using Weight = std::vector<Rational>;
  auto weight = [&](Eigen::Index i, Eigen::Index j) {
    Weight wt;
    for (const auto& d : torus.basis()) wt.push_back(d(i, i) - d(j, j));
    return wt;
  };
  std::map<Weight, MatSpace<Rational>> spaces;
  for (const auto& b : c.p.basis()) {
    std::map<Weight, MatQ> parts;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        auto [it, fresh] = parts.try_emplace(weight(i, j), zeros<Rational>(n, n));
        it->second(i, j) = b(i, j);
      }
    for (auto& [wt, m] : parts) spaces.try_emplace(wt, MatSpace<Rational>(n)).first->second.add(m);
  }
  c.p_red = MatSpace<Rational>(n);
  for (const auto& [wt, s] : spaces) {
    Weight neg = wt;
    for (auto& x : neg) x = -x;
    if (spaces.count(neg)) c.p_red = c.p_red + s;
  }
  c.l = derived(c.p_red);
  c.t = centralizer(c.p_red, c.p_red);
  return c;
}

ChevalleyCheck verify_chevalley(const ChevalleyData& c) {
  ChevalleyCheck r;
  auto fail = [&](const std::string& why) {
    r.ok = false;
    r.failure = why;
    return r;
  };
  if (c.p_nil.dim() + c.p_red.dim() != c.p.dim() || (c.p_nil + c.p_red).dim() != c.p.dim()) {
    return fail("p is not the direct sum of p_nil and p_red");
  }
  for (const auto& x : c.p_nil.basis())
    if (!is_nilpotent_matrix(x)) return fail("p_nil has a non-nilpotent element");
  if (!is_abelian(c.t)) return fail("t is not abelian");
  if (!c.l.subset_of(c.p_red)) return fail("l is not inside p_red");
  if (!bracket_space(c.t, c.l).subset_of(c.l)) return fail("[t, l] is not inside l");
  if (!bracket_space(c.p_nil, c.p).subset_of(c.p_nil)) return fail("p_nil is not an ideal");
  MatSpace<Rational> dp = derived(c.p);
  if (!(c.p_nil.intersect(dp) == c.radical.intersect(dp))) return fail("p_nil and r differ on [p, p]");
  return r;
}

}  // namespace flagpar
