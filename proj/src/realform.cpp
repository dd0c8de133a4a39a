#include "flagpar/realform.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "realform_internal.hpp"

namespace flagpar {

std::string to_string(RealKind k) {
  switch (k) {
    case RealKind::Split:
      return "split";
    case RealKind::Quaternionic:
      return "quaternionic";
    case RealKind::Unitary:
      return "unitary";
    case RealKind::Orthogonal:
      return "orthogonal";
    case RealKind::OrthogonalStar:
      return "orthogonal-star";
    case RealKind::Symplectic:
      return "symplectic";
    case RealKind::QuaternionicUnitary:
      return "quaternionic-unitary";
  }
  return "?";
}

bool RealStructure::hermitian() const {
  return kind == RealKind::Unitary || kind == RealKind::Orthogonal || kind == RealKind::QuaternionicUnitary;
}

std::string RealStructure::field() const {
  switch (kind) {
    case RealKind::Unitary:
      return "C";
    case RealKind::Orthogonal:
      return "R";
    case RealKind::QuaternionicUnitary:
      return "H";
    default:
      throw UnsupportedKernel(name + " is not defined by a hermitian form over R, C or H");
  }
}

RealStructure make_real_form(const std::string& raw) {
  std::string name = std::regex_replace(raw, std::regex("∞"), "inf");
  name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
  auto param = [](const std::string& s) -> std::optional<std::int64_t> {
    if (s == "inf") return std::nullopt;
    return std::stoll(s);
  };
  RealStructure rs;
  rs.name = name;
  std::smatch m;
  if (std::regex_match(name, m, std::regex(R"((sl|gl)\(inf;(R|H)\))"))) {
    rs.kind = m[2] == "R" ? RealKind::Split : RealKind::Quaternionic;
    rs.special = m[1] == "sl";
    rs.system = DualSystem::delta(IndexDomain::Nat);
  } else if (std::regex_match(name, m, std::regex(R"((su|u)\((\d+|inf),inf\))"))) {
    rs.kind = RealKind::Unitary;
    rs.special = m[1] == "su";
    rs.p = param(m[2]);
    rs.system = DualSystem::delta(IndexDomain::Nat);
    rs.system.form = FormKind::Hermitian;
    rs.system.pairs = rs.p;
    rs.system.signature = rs.p.value_or(0);
  } else if (std::regex_match(name, m, std::regex(R"(so\((\d+|inf),inf\))"))) {
    rs.kind = RealKind::Orthogonal;
    rs.p = param(m[1]);
    rs.system = DualSystem::symmetric(rs.p, std::nullopt);
    rs.ambient = Ambient::SO;
  } else if (name == "so*(2inf)") {
    rs.kind = RealKind::OrthogonalStar;
    rs.system = DualSystem::symmetric(std::nullopt, std::nullopt);
    rs.ambient = Ambient::SO;
  } else if (name == "sp(inf;R)") {
    rs.kind = RealKind::Symplectic;
    rs.system = DualSystem::alternating(std::nullopt, std::nullopt);
    rs.ambient = Ambient::SP;
  } else if (std::regex_match(name, m, std::regex(R"(sp\((\d+|inf),inf\))"))) {
    rs.kind = RealKind::QuaternionicUnitary;
    rs.p = param(m[1]);
    rs.system = DualSystem::alternating(std::nullopt, std::nullopt);
    rs.ambient = Ambient::SP;
  } else {
    throw Error("unknown real form: " + raw);
  }
  if (rs.p && *rs.p < 0) throw Error("negative signature parameter");
  // Invariants at window 4: tau is an involution preserving g_C and commuting with theta.
  Window w = real_window(rs, 4);
  MatSpace<GaussianQ> g = complexify(complex_algebra(rs, w));
  for (const auto& b : g.basis()) {
    MatG t = tau(rs, w, b);
    if (!(tau(rs, w, t) == b) || !g.contains(t) || !(tau(rs, w, theta(b)) == theta(t))) {
      throw Error("tau is not an involution of g_C commuting with theta on " + name);
    }
  }
  return rs;
}

namespace detail {

std::int64_t herm_partner(const RealStructure& rs, std::int64_t i) {
  switch (rs.kind) {
    case RealKind::Unitary:
    case RealKind::Orthogonal:
      if (rs.p && i > 2 * *rs.p) return i;
      return i % 2 ? i + 1 : i - 1;
    case RealKind::QuaternionicUnitary: {
      if (rs.p && i > 4 * *rs.p) return i;
      std::int64_t base = (i - 1) / 4 * 4;
      return base + 4 - (i - 1 - base);
    }
    default:
      return i;
  }
}

std::int64_t j_partner(const RealStructure& rs, std::int64_t i) {
  switch (rs.kind) {
    case RealKind::Quaternionic:
      return i % 2 ? i + 1 : i - 1;
    case RealKind::QuaternionicUnitary: {
      if (rs.p && i > 4 * *rs.p) return i % 2 ? i + 1 : i - 1;
      std::int64_t base = (i - 1) / 4 * 4;
      std::int64_t r = i - 1 - base;
      return base + 1 + (r + 2) % 4;
    }
    default:
      return i;
  }
}

CutSet permute_blocks(const CutSet& s, std::int64_t period, const std::vector<std::int64_t>& perm,
                      std::optional<std::int64_t> region_end) {
  CutSet region = region_end ? CutSet::nat_range(1, *region_end) : CutSet::full(IndexDomain::Nat);
  CutSet out = s.minus(region);
  std::vector<Index> singles;
  auto image = [&](std::int64_t k) {
    std::int64_t base = (k - 1) / period * period;
    return Index::nat(base + 1 + perm[static_cast<std::size_t>(k - 1 - base)]);
  };
  const CutSet inside = s.intersect(region);
  for (const auto& v : inside.intervals()) {
    std::int64_t a = v.lo.infinite ? 1 : v.lo.point.nat_value();
    std::int64_t g0 = (a - 1 + period - 1) / period * period + 1;
    if (v.hi.infinite) {
      for (std::int64_t k = a; k < g0; ++k) singles.push_back(image(k));
      out = out.unite(CutSet::greater_equal(Index::nat(g0)));
      continue;
    }
    std::int64_t b = v.hi.point.nat_value();
    std::int64_t g1 = (b - 1) / period * period + 1;
    if (g0 >= g1) {
      for (std::int64_t k = a; k < b; ++k) singles.push_back(image(k));
      continue;
    }
    for (std::int64_t k = a; k < g0; ++k) singles.push_back(image(k));
    out = out.unite(CutSet::range(Index::nat(g0), Index::nat(g1)));
    for (std::int64_t k = g1; k < b; ++k) singles.push_back(image(k));
  }
  return out.unite(CutSet::finite(IndexDomain::Nat, singles));
}

CutSet herm_image(const RealStructure& rs, const CutSet& s) {
  switch (rs.kind) {
    case RealKind::Unitary:
    case RealKind::Orthogonal:
      return permute_blocks(s, 2, {1, 0}, rs.p ? std::optional<std::int64_t>(2 * *rs.p) : std::nullopt);
    case RealKind::QuaternionicUnitary:
      return permute_blocks(s, 4, {3, 2, 1, 0}, rs.p ? std::optional<std::int64_t>(4 * *rs.p) : std::nullopt);
    default:
      return s;
  }
}

}  // namespace detail

Window real_window(const RealStructure& rs, std::size_t n, const std::vector<Index>& extra) {
  std::set<std::int64_t> idx;
  for (std::size_t k = 1; k <= n; ++k) idx.insert(static_cast<std::int64_t>(k));
  for (const auto& e : extra) idx.insert(e.nat_value());
  for (bool grew = true; grew;) {
    grew = false;
    for (std::int64_t i : std::vector<std::int64_t>(idx.begin(), idx.end())) {
      for (std::int64_t j : {rs.system.partner(Index::nat(i)).nat_value(), detail::herm_partner(rs, i),
                             detail::j_partner(rs, i)}) {
        grew |= idx.insert(j).second;
      }
    }
  }
  std::vector<Index> out;
  for (auto i : idx) out.push_back(Index::nat(i));
  return window(IndexDomain::Nat, 0, out);
}

namespace detail {

MatG herm_matrix(const RealStructure& rs, const Window& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  MatG h = zeros<GaussianQ>(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    std::int64_t i = w.indices[static_cast<std::size_t>(a)].nat_value();
    std::int64_t j = herm_partner(rs, i);
    auto b = static_cast<Eigen::Index>(w.position(Index::nat(j)));
    Rational v = 1;
    if (rs.kind == RealKind::OrthogonalStar && i % 2 == 0) v = -1;
    if (rs.kind == RealKind::QuaternionicUnitary && j != i) {
      std::int64_t r = (i - 1) % 4;
      if (r == 1 || r == 2) v = -1;
    }
    h(b, a) = GaussianQ(v);
  }
  return h;
}

MatG j_matrix(const Window& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  MatG j = zeros<GaussianQ>(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    std::int64_t i = w.indices[static_cast<std::size_t>(a)].nat_value();
    auto b = static_cast<Eigen::Index>(w.position(Index::nat(i % 2 ? i + 1 : i - 1)));
    j(b, a) = GaussianQ(i % 2 ? 1 : -1);
  }
  return j;
}

}  // namespace detail

MatG tau(const RealStructure& rs, const Window& w, const MatG& x) {
  switch (rs.kind) {
    case RealKind::Split:
    case RealKind::Orthogonal:
    case RealKind::Symplectic:
      return conjugate<GaussianQ>(x);
    case RealKind::Quaternionic: {
      MatG j = detail::j_matrix(w);
      return MatG(j * conjugate<GaussianQ>(x) * MatG(-j));
    }
    default: {
      MatG h = detail::herm_matrix(rs, w);
      return MatG(-(h * adjoint<GaussianQ>(x) * h));
    }
  }
}

MatSpace<GaussianQ> complexify(const MatSpace<Rational>& s) {
  MatSpace<GaussianQ> out(s.n());
  for (const auto& b : s.basis()) {
    MatG g = to_gaussian(b);
    out.add(g);
    out.add(MatG(g * GaussianQ(0, 1)));
  }
  return out;
}

MatSpace<GaussianQ> real_points(const RealStructure& rs, const Window& w, const MatSpace<Rational>& s) {
  return complexify(s).kernel([&](const MatG& x) -> Col<Rational> {
    Col<Rational> c = coords(MatG(tau(rs, w, x) - x));
    if (!rs.special) return c;
    Col<Rational> t = trace_coords(x);
    Col<Rational> out(c.size() + t.size());
    out << c, t;
    return out;
  });
}

MatSpace<Rational> complex_algebra(const RealStructure& rs, const Window& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  MatSpace<Rational> all(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      MatQ e = zeros<Rational>(n, n);
      e(i, j) = 1;
      all.add(e);
    }
  if (rs.ambient == Ambient::GL) {
    if (!rs.special) return all;
    return all.kernel([](const MatQ& x) -> Col<Rational> { return trace_coords(x); });
  }
  MatQ g = rs.system.gram(w);
  return all.kernel([&](const MatQ& x) -> Col<Rational> { return coords(MatQ(x.transpose() * g + g * x)); });
}

MatSpace<GaussianQ> real_algebra(const RealStructure& rs, const Window& w) {
  return real_points(rs, w, complex_algebra(rs, w));
}

std::size_t classical_dimension(const RealStructure& rs, const Window& w) {
  const std::size_t n = w.size();
  const std::size_t s = rs.special ? 1 : 0;
  switch (rs.kind) {
    case RealKind::Split:
    case RealKind::Unitary:
      return n * n - s;
    case RealKind::Quaternionic:
      return 4 * (n / 2) * (n / 2) - s;
    case RealKind::Orthogonal:
    case RealKind::OrthogonalStar:
      return n * (n - 1) / 2;
    case RealKind::Symplectic:
    case RealKind::QuaternionicUnitary:
      return (n / 2) * (n + 1);
  }
  return 0;
}

CutSet tau_member(const RealStructure& rs, const CutSet& m) {
  switch (rs.kind) {
    case RealKind::Split:
    case RealKind::Orthogonal:
    case RealKind::Symplectic:
      return m;
    case RealKind::Quaternionic:
      return detail::permute_blocks(m, 2, {1, 0}, std::nullopt);
    default:
      return rs.system.universe().minus(detail::herm_image(rs, m));
  }
}

}  // namespace flagpar
