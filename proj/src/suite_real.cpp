#include <algorithm>
#include <map>
#include <random>

#include "flagpar/induce.hpp"
#include "flagpar/suite.hpp"

namespace flagpar::battery {

namespace {

CutSet fin(const std::vector<int>& v) {
  std::vector<Index> p;
  for (int x : v) p.push_back(Index::nat(x));
  return CutSet::finite(IndexDomain::Nat, p);
}

/// Real parabolic of the chain of cumulative unions of the given lines,
/// closed under annihilators (forms) or the tau image of members (other kinds).
RealParabolic line_chain(const std::string& form, const std::vector<std::vector<int>>& lines) {
  RealStructure rs = make_real_form(form);
  std::vector<CutSet> members;
  std::vector<int> acc;
  for (const auto& l : lines) {
    acc.insert(acc.end(), l.begin(), l.end());
    members.push_back(fin(acc));
  }
  std::vector<CutSet> all = members;
  for (const auto& m : members) {
    CutSet img = rs.system.has_form() ? annihilator(rs.system, Side::V, m) : tau_member(rs, m);
    if (std::find(all.begin(), all.end(), img) == all.end()) all.push_back(img);
  }
  GenFlag f = GenFlag::finite_chain(Side::V, rs.system, all);
  ParabolicDesc p = rs.system.has_form() ? make_selftaut_parabolic(rs.system, f, rs.ambient) : normalizer_of(rs.system, f);
  return real_parabolic(p, rs);
}

std::string failed(const Certificate& c) {
  std::string s;
  for (const auto& [k, ok] : c)
    if (!ok) s += (s.empty() ? "" : ", ") + k;
  return s;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct ManCase {
  std::string label;
  RealParabolic rp;
  Window w;
  std::size_t a, n;  // expected restricted root data
};

}  // namespace

std::pair<bool, std::string> man_certificates() {
  std::vector<ManCase> cases;
  for (int n = 2; n <= 5; ++n) {
    RealStructure rs = make_real_form("sl(inf;R)");
    std::vector<CutSet> members;
    for (int k = 1; k < n; ++k) members.push_back(CutSet::nat_range(1, k));
    ParabolicDesc p = normalizer_of(rs.system, GenFlag::finite_chain(Side::V, rs.system, members));
    cases.push_back({"sl(" + std::to_string(n) + ";R)", real_parabolic(p, rs), real_window(rs, static_cast<std::size_t>(n)),
                     static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n * (n - 1) / 2)});
  }
  for (int n = 1; n <= 4; ++n) {
    RealParabolic rp = line_chain("su(1,inf)", {{1}});
    cases.push_back({"su(1," + std::to_string(n) + ")", rp, real_window(rp.form, static_cast<std::size_t>(n + 1)), 1,
                     static_cast<std::size_t>(2 * n - 1)});
  }
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> lines;
    for (int k = 1; k <= n; ++k) lines.push_back({2 * k - 1});
    RealParabolic rp = line_chain("sp(inf;R)", lines);
    cases.push_back({"sp(" + std::to_string(n) + ";R)", rp, real_window(rp.form, static_cast<std::size_t>(2 * n)),
                     static_cast<std::size_t>(n), static_cast<std::size_t>(n * n)});
  }
  for (const auto& c : cases) {
    ManDecomp md = man_decompose(c.rp, c.w);
    if (!all_pass(md.certificate)) return {false, c.label + " fails " + failed(md.certificate)};
    RootOracle o = restricted_root_oracle(c.rp.form, c.w, md.a);
    if (md.m.dim() + md.a.dim() + md.n.dim() != md.p.dim()) return {false, c.label + ": dimensions do not add up"};
    if (o.dim_m != md.m.dim() || o.dim_n != md.n.dim() || o.dim_a != md.a.dim()) {
      return {false, c.label + ": restricted root oracle gives m=" + std::to_string(o.dim_m) + " n=" + std::to_string(o.dim_n)};
    }
    if (md.a.dim() != c.a || md.n.dim() != c.n) {
      return {false, c.label + ": a=" + std::to_string(md.a.dim()) + " n=" + std::to_string(md.n.dim())};
    }
  }
  return {true, std::to_string(cases.size()) + " real forms"};
}

std::pair<bool, std::string> dagger_certificates() {
  struct Case {
    std::string form;
    std::vector<std::vector<int>> lines;
    std::size_t level;
  };
  const std::vector<Case> cases{
      {"su(1,inf)", {{1}}, 3}, {"su(2,inf)", {{1}, {3}}, 4}, {"u(1,inf)", {{1}}, 4},
      {"so(1,inf)", {{1}}, 4}, {"so(2,inf)", {{1}, {3}}, 4}, {"sp(1,inf)", {{1, 3}}, 4},
  };
  std::size_t fixed = 0;
  for (const auto& c : cases) {
    RealParabolic rp = line_chain(c.form, c.lines);
    DaggerResult d = construct_dagger(rp, c.level);
    if (!all_pass(d.certificate)) return {false, c.form + " fails " + failed(d.certificate)};
    ManDecomp md = man_decompose(rp, d.window);
    if (!(d.m_dagger == md.m)) return {false, c.form + ": m-dagger differs from m"};
    if (!(d.a_dagger == md.a)) return {false, c.form + ": a-dagger differs from a"};
    if (d.fixed_point) {
      ++fixed;
      if (!(complex_truncation(d.p_dagger, d.window) == complex_truncation(rp, d.window))) {
        return {false, c.form + ": fixed point but p-dagger differs from p"};
      }
    }
  }
  if (fixed == 0) return {false, "no scenario reached the fixed point"};
  return {true, std::to_string(cases.size()) + " scenarios, " + std::to_string(fixed) + " fixed points"};
}

std::pair<bool, std::string> induction_fidelity() {
  std::mt19937 rng(6174);
  std::size_t twists = 0;
  for (int n = 2; n <= 3; ++n) {
    RealStructure rs = make_real_form("sl(inf;R)");
    std::vector<CutSet> members;
    for (int k = 1; k < n; ++k) members.push_back(CutSet::nat_range(1, k));
    RealParabolic rp = real_parabolic(normalizer_of(rs.system, GenFlag::finite_chain(Side::V, rs.system, members)), rs);
    Window w = real_window(rs, static_cast<std::size_t>(n));
    CharacterSpec spec;
    for (int k = 1; k < n; ++k) spec.sigma.push_back(Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3)));
    const std::size_t d = 6;
    InducedModule mod = induced_module(rp, w, spec, d);
    const std::string tag = "sl(" + std::to_string(n) + "): ";
    auto dims = mod.graded_dims();
    const std::size_t r = mod.n_minus.size();
    if (r != static_cast<std::size_t>(n * (n - 1) / 2)) return {false, tag + "wrong number of negative roots"};
    for (std::size_t k = 0; k <= d; ++k)
      if (dims[k] != binomial(r + k - 1, k)) return {false, tag + "graded dimension " + std::to_string(k) + " is off"};
    if (!check_bracket_fidelity(mod)) return {false, tag + "commutation identity fails"};
    // the interior columns of the cut action matrices respect brackets
    std::vector<std::vector<std::vector<std::pair<Eigen::Index, GaussianQ>>>> cols;
    for (const auto& m : mod.action) {
      cols.emplace_back(static_cast<std::size_t>(m.cols()));
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          if (!(m(i, j) == GaussianQ(0))) cols.back()[static_cast<std::size_t>(j)].emplace_back(i, m(i, j));
    }
    auto product_col = [&](std::size_t a, std::size_t b, std::size_t col) {
      std::map<Eigen::Index, GaussianQ> out;
      for (const auto& [k, x] : cols[b][col])
        for (const auto& [i, y] : cols[a][static_cast<std::size_t>(k)]) out[i] += y * x;
      return out;
    };
    for (std::size_t a = 0; a < mod.generators.size(); ++a)
      for (std::size_t b = a + 1; b < mod.generators.size(); ++b) {
        MatG rhs = mod.act(commutator<GaussianQ>(to_gaussian(mod.generators[a]), to_gaussian(mod.generators[b])));
        for (std::size_t col = 0; col < mod.dim(); ++col) {
          if (mod.monomials[col / mod.e_dim].size() + 2 > d) continue;
          auto lhs = product_col(a, b, col);
          for (const auto& [i, y] : product_col(b, a, col)) lhs[i] -= y;
          bool same = true;
          for (Eigen::Index i = 0; i < rhs.rows(); ++i) {
            auto it = lhs.find(i);
            same = same && rhs(i, static_cast<Eigen::Index>(col)) == (it == lhs.end() ? GaussianQ(0) : it->second);
          }
          if (!same) return {false, tag + "action matrices break the bracket in column " + std::to_string(col)};
        }
      }
    for (int t = 0; t < 100; ++t) {
      MatG xi = zeros<GaussianQ>(static_cast<Eigen::Index>(w.size()), static_cast<Eigen::Index>(w.size()));
      for (const auto& b : mod.p_basis) xi += to_gaussian(b) * GaussianQ(Rational(static_cast<int>(rng() % 7) - 3));
      Monomial eta;
      const std::size_t deg = rng() % d;
      for (std::size_t k = 0; k < deg; ++k) eta.push_back(static_cast<int>(rng() % r));
      std::sort(eta.begin(), eta.end());
      ++twists;
      if (!check_ad_twist(mod, xi, eta)) return {false, tag + "ad-twist identity fails in case " + std::to_string(t)};
    }
    if (n == 2) {
      // e f^k v = k (lambda - k + 1) f^(k-1) v
      MatG f = to_gaussian(mod.n_minus[0]);
      MatG e = MatG(f.transpose());
      ModuleVector hv = mod.apply(commutator<GaussianQ>(e, f), mod.basis_vector({}));
      GaussianQ lambda = hv.count({}) ? hv.at({})(0, 0) : GaussianQ(0);
      for (int k = 1; k <= static_cast<int>(d); ++k) {
        ModuleVector ref;
        GaussianQ c = GaussianQ(k) * (lambda - GaussianQ(k - 1));
        if (!(c == GaussianQ(0))) ref[Monomial(static_cast<std::size_t>(k - 1), 0)] = MatG::Constant(1, 1, c);
        if (!same_vector(mod.apply(e, mod.basis_vector(Monomial(static_cast<std::size_t>(k), 0))), ref)) {
          return {false, tag + "disagrees with the sl(2) Verma formula at k=" + std::to_string(k)};
        }
      }
    }
  }
  return {true, std::to_string(twists) + " ad-twist cases"};
}

namespace {

/// Cayley transform of a skew-hermitian matrix: unitary and exact.
MatG random_unitary(std::mt19937& rng, Eigen::Index n) {
  MatG a = zeros<GaussianQ>(n, n);
  auto small = [&]() { return Rational(static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 3)); };
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = GaussianQ(Rational(0), small());
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = GaussianQ(small(), small());
      a(j, i) = GaussianQ(-a(i, j).re, a(i, j).im);
    }
  }
  MatG id = identity<GaussianQ>(n);
  return MatG((id - a) * inverse<GaussianQ>(MatG(id + a)));
}

GaussianQ leibniz(const MatG& m) {
  const auto n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  GaussianQ total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    GaussianQ term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

std::pair<bool, std::string> character_utilities() {
  std::mt19937 rng(2718);
  const Eigen::Index n = 4;
  for (int c = 0; c < 100; ++c) {
    MatG u = random_unitary(rng, n);
    MatG d = zeros<GaussianQ>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      int den = 1 + static_cast<int>(rng() % 4);
      d(i, i) = GaussianQ(Rational(static_cast<int>(rng() % static_cast<unsigned>(den + 1)), den));
    }
    MatG b = MatG(u * d * adjoint<GaussianQ>(u));
    MatG x(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        x(i, j) = GaussianQ(Rational(static_cast<int>(rng() % 7) - 3), Rational(static_cast<int>(rng() % 5) - 2));
    if (!is_hermitian_contraction(b)) return {false, "case " + std::to_string(c) + ": B is not recognised as a contraction"};
    MatG direct = MatG(identity<GaussianQ>(n) - b + b * x);
    if (!(psi_b(b, x) == leibniz(direct))) return {false, "case " + std::to_string(c) + ": psi_B differs from the determinant"};
  }
  if (!voiculescu_check({{0, Rational(1)}}, 4)) return {false, "delta_0 rejected"};
  if (voiculescu_check({{0, Rational(2)}}, 4)) return {false, "sum 2 accepted"};
  if (voiculescu_check({{0, Rational(2)}, {1, Rational(-1)}}, 4)) return {false, "c_0 = 2, c_1 = -1 accepted"};
  return {true, "100 psi_B cases, 3 character sequences"};
}

}  // namespace flagpar::battery
