#include <algorithm>

#include "realform_internal.hpp"

namespace flagpar {

namespace detail {

MatSpace<Rational> to_operators(const DualSystem& sys, const Window& w, const MatSpace<Rational>& coeffs) {
  MatQ gt = sys.gram(w).transpose();
  MatSpace<Rational> out(coeffs.n());
  for (const auto& b : coeffs.basis()) out.add(MatQ(b * gt));
  return out;
}

std::vector<Index> support(const Window& w, const MatSpace<GaussianQ>& s) {
  std::vector<Index> out;
  for (std::size_t a = 0; a < w.size(); ++a) {
    const auto i = static_cast<Eigen::Index>(a);
    bool hit = false;
    for (const auto& b : s.basis())
      for (Eigen::Index j = 0; j < b.rows() && !hit; ++j)
        hit = !(b(i, j) == GaussianQ(0)) || !(b(j, i) == GaussianQ(0));
    if (hit) out.push_back(w.indices[a]);
  }
  return out;
}

}  // namespace detail

namespace {

std::vector<Index> first_points(const CutSet& s, std::size_t k) {
  std::vector<Index> out;
  for (const auto& v : s.intervals()) {
    std::int64_t a = v.lo.infinite ? 1 : v.lo.point.nat_value();
    for (std::int64_t i = a; out.size() < k && (v.hi.infinite || i < v.hi.point.nat_value()); ++i) {
      out.push_back(Index::nat(i));
    }
    if (out.size() >= k) break;
  }
  return out;
}

void check_compatible(const ParabolicDesc& p, const RealStructure& rs) {
  const DualSystem& a = p.system;
  const DualSystem& b = rs.system;
  if (a.domain != IndexDomain::Nat || a.kernel != Kernel::Delta) {
    throw UnsupportedKernel("real forms are modelled on the delta pairing over Nat");
  }
  if (a.has_form() != b.has_form() || (b.has_form() && (a.form != b.form || a.pairs != b.pairs))) {
    throw Error("the parabolic's system does not carry the complex form of " + rs.name);
  }
  if (a.dimension) throw Error("real forms are modelled on infinite systems");
  if (p.ambient != rs.ambient) throw Error("ambient " + to_string(p.ambient) + " does not match " + rs.name);
}

std::string card_string(const CutSet& s, std::int64_t divisor = 1) {
  auto c = s.cardinality();
  return c ? std::to_string(static_cast<std::int64_t>(*c) / divisor) : "inf";
}

MatG embed(const MatG& x, const Window& small, const Window& big) {
  const auto n = static_cast<Eigen::Index>(big.size());
  MatG out = zeros<GaussianQ>(n, n);
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < small.size(); ++j) {
      out(static_cast<Eigen::Index>(big.position(small.indices[i])),
          static_cast<Eigen::Index>(big.position(small.indices[j]))) =
          x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  return out;
}

}  // namespace

RealParabolic real_parabolic(const ParabolicDesc& p, const RealStructure& rs) {
  check_compatible(p, rs);
  RealParabolic rp{p, rs};
  if (rs.special && rs.ambient == Ambient::GL) {
    TraceRow total{{"total", Rational(1)}};
    if (std::find(rp.complex.trace_rows.begin(), rp.complex.trace_rows.end(), total) == rp.complex.trace_rows.end()) {
      rp.complex.trace_rows.push_back(total);
    }
  }
  const GenFlag f = rp.complex.flags().front();
  std::vector<CutSet> members = f.coarse();
  Window near = window(IndexDomain::Nat, 8);
  for (auto& m : f.members_near(near))
    if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
  for (const auto& m : members) {
    CutSet img = tau_member(rs, m);
    if (!f.is_member(img)) {
      throw NotTauStable("member " + to_string(m) + " is sent to " + to_string(img) + ", which is not a member", m);
    }
  }
  Window w = real_level_window(rp, 4);
  MatSpace<Rational> c = complex_truncation(rp, w);
  if (real_points(rs, w, c).dim() != c.dim()) throw Error("window truncation is not tau-stable");
  return rp;
}

Window real_level_window(const RealParabolic& rp, std::size_t n) {
  Window w = level_window(rp.complex, n);
  return real_window(rp.form, 0, w.indices);
}

MatSpace<Rational> complex_truncation(const RealParabolic& rp, const Window& w) {
  return detail::to_operators(rp.complex.system, w, stabilizer_truncation(rp.complex, w));
}

MatSpace<GaussianQ> real_truncation(const RealParabolic& rp, const Window& w) {
  return real_points(rp.form, w, complex_truncation(rp, w));
}

bool real_contains(const RealParabolic& rp, const Window& w, const MatG& x) {
  if (!(tau(rp.form, w, x) == x)) return false;
  return complexify(complex_truncation(rp, w)).contains(x);
}

// ---------------------------------------------------------------------------

std::vector<RealBlock> real_levi(const RealParabolic& rp, std::size_t level) {
  const RealStructure& rs = rp.form;
  LeviDatum l = levi_of(rp.complex);
  const std::size_t nb = l.blocks.size() + (l.z ? 1 : 0);
  std::vector<Index> extra = level_window(rp.complex, level).indices;
  for (const auto& b : l.blocks) {
    for (auto& i : first_points(b.x, 3)) extra.push_back(i);
    for (auto& i : first_points(b.y, 3)) extra.push_back(i);
  }
  if (l.z)
    for (auto& i : first_points(*l.z, 3)) extra.push_back(i);
  Window w = real_window(rs, 0, extra);
  std::vector<MatSpace<Rational>> spaces;
  std::vector<MatSpace<GaussianQ>> cspaces;
  for (std::size_t b = 0; b < nb; ++b) {
    spaces.push_back(detail::to_operators(l.system, w, levi_block_space(l, b, w)));
    cspaces.push_back(complexify(spaces.back()));
  }
  std::vector<RealBlock> out;
  std::vector<bool> done(nb, false);
  for (std::size_t b = 0; b < nb; ++b) {
    if (done[b]) continue;
    std::size_t image = nb;
    for (std::size_t c = 0; c < nb && image == nb; ++c) {
      bool inside = true;
      for (const auto& x : cspaces[b].basis()) inside = inside && cspaces[c].contains(tau(rs, w, x));
      if (inside) image = c;
    }
    if (image == nb) throw Error("tau does not permute the Levi blocks");
    RealBlock rb;
    rb.complex_blocks = {b};
    MatSpace<Rational> sum = spaces[b];
    if (image != b) {
      rb.complex_blocks.push_back(image);
      sum = sum + spaces[image];
      done[image] = true;
    }
    done[b] = true;
    MatSpace<GaussianQ> real = real_points(rs, w, sum);
    rb.dim = real.dim();
    rb.compact = std::all_of(real.basis().begin(), real.basis().end(), [](const MatG& x) { return theta(x) == x; });
    const bool is_z = b == l.blocks.size();
    const CutSet& x = is_z ? *l.z : l.blocks[b].x;
    if (image != b) {
      rb.label = "diag sl(" + card_string(x) + ")";
    } else if (is_z) {
      switch (rs.kind) {
        case RealKind::Orthogonal:
          rb.label = rb.compact ? "so(" + card_string(x) + ")" : "so(*,*)";
          break;
        case RealKind::OrthogonalStar:
          rb.label = "so*(" + card_string(x) + ")";
          break;
        case RealKind::Symplectic:
          rb.label = "sp(" + card_string(x, 2) + ";R)";
          break;
        default:
          rb.label = rb.compact ? "sp(" + card_string(x, 2) + ")" : "sp(*,*)";
      }
    } else {
      switch (rs.kind) {
        case RealKind::Split:
        case RealKind::Orthogonal:
        case RealKind::Symplectic:
          rb.label = "sl(" + card_string(x) + ";R)";
          break;
        case RealKind::Quaternionic:
        case RealKind::QuaternionicUnitary:
          rb.label = rb.compact ? "sp(" + card_string(x, 2) + ")" : "sl(" + card_string(x, 2) + ";H)";
          break;
        default:
          rb.label = rb.compact ? "su(" + card_string(x) + ")" : "su(*,*)";
      }
    }
    out.push_back(std::move(rb));
  }
  return out;
}

bool is_minimal_levi(const std::vector<RealBlock>& blocks) {
  return std::all_of(blocks.begin(), blocks.end(), [](const RealBlock& b) { return b.compact; });
}

CartanData cartan_involution(const RealParabolic& rp, std::size_t n) {
  const RealStructure& rs = rp.form;
  CartanData c;
  c.window = real_level_window(rp, n);
  c.g = real_algebra(rs, c.window);
  c.k = c.g.kernel([](const MatG& x) -> Col<Rational> { return coords(MatG(theta(x) - x)); });
  c.s = c.g.kernel([](const MatG& x) -> Col<Rational> { return coords(MatG(theta(x) + x)); });
  Window big = real_level_window(rp, n + 1);
  MatSpace<GaussianQ> g_big = real_algebra(rs, big);
  c.coherent = c.k.dim() + c.s.dim() == c.g.dim();
  for (const auto& x : c.g.basis()) {
    MatG e = embed(x, c.window, big);
    c.coherent = c.coherent && g_big.contains(e) && theta(e) == embed(theta(x), c.window, big);
  }
  LeviDatum l = levi_of(rp.complex);
  MatSpace<Rational> lc(static_cast<Eigen::Index>(c.window.size()));
  for (std::size_t b = 0; b < l.blocks.size() + (l.z ? 1 : 0); ++b) {
    lc = lc + detail::to_operators(l.system, c.window, levi_block_space(l, b, c.window));
  }
  c.levi_in_k = real_points(rs, c.window, lc).subset_of(c.k);
  return c;
}

bool all_pass(const Certificate& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& e) { return e.second; });
}

}  // namespace flagpar
