#include "flagpar/induce.hpp"

#include <algorithm>
#include <functional>

#include "realform_internal.hpp"

namespace flagpar {

namespace {

/// Coordinates of a matrix in a fixed basis, over Q(i) when complex is set:
/// the basis b_k is then read as the Q-basis {b_k, i b_k}.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(const std::vector<MatG>& basis, bool complex) : complex_(complex), size_(basis.size()) {
    if (basis.empty()) return;
    std::vector<Col<Rational>> cols;
    for (const auto& b : basis) {
      cols.push_back(coords(b));
      if (complex) cols.push_back(coords(MatG(b * GaussianQ(0, 1))));
    }
    a_ = MatQ(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) a_.col(static_cast<Eigen::Index>(k)) = cols[k];
    auto e = rref<Rational>(MatQ(a_.transpose()));
    if (e.pivots.size() != cols.size()) throw Error("coordinate basis is linearly dependent");
    rows_ = e.pivots;
    MatQ sq(static_cast<Eigen::Index>(rows_.size()), a_.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r) sq.row(static_cast<Eigen::Index>(r)) = a_.row(rows_[r]);
    inv_ = inverse<Rational>(sq);
  }

  std::optional<std::vector<GaussianQ>> solve(const MatG& z) const {
    Col<Rational> v = coords(z);
    std::vector<GaussianQ> out(size_, GaussianQ(0));
    if (size_ == 0) {
      for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v(k) != 0) return std::nullopt;
      return out;
    }
    Col<Rational> rhs(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r) rhs(static_cast<Eigen::Index>(r)) = v(rows_[r]);
    Col<Rational> x = inv_ * rhs;
    if (!(a_ * x == v)) return std::nullopt;
    for (std::size_t k = 0; k < size_; ++k) {
      out[k] = complex_ ? GaussianQ(x(static_cast<Eigen::Index>(2 * k)), x(static_cast<Eigen::Index>(2 * k + 1)))
                        : GaussianQ(x(static_cast<Eigen::Index>(k)));
    }
    return out;
  }

 private:
  bool complex_ = false;
  std::size_t size_ = 0;
  MatQ a_, inv_;
  std::vector<Eigen::Index> rows_;
};

std::vector<MatG> gaussian_basis(const MatSpace<GaussianQ>& s) { return s.basis(); }

/// Real and imaginary parts of a Gaussian matrix.
std::pair<MatQ, MatQ> split(const MatG& z) {
  MatQ re(z.rows(), z.cols()), im(z.rows(), z.cols());
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      re(i, j) = z(i, j).re;
      im(i, j) = z(i, j).im;
    }
  return {re, im};
}

bool is_zero_block(const MatG& m) { return is_zero<GaussianQ>(m); }

void add_into(ModuleVector& v, const Monomial& m, const MatG& block) {
  auto it = v.find(m);
  if (it == v.end()) {
    if (!is_zero_block(block)) v.emplace(m, block);
    return;
  }
  it->second += block;
  if (is_zero_block(it->second)) v.erase(it);
}

}  // namespace

std::size_t CharacterSpec::dim() const {
  if (!kappa || kappa->empty()) return 1;
  return static_cast<std::size_t>(kappa->front().rows());
}

void check_character(const ManDecomp& md, const CharacterSpec& spec) {
  if (spec.sigma.size() != md.a.dim()) throw SizeMismatch("sigma needs one value per basis vector of a");
  if (!spec.kappa) return;
  const auto& k = *spec.kappa;
  if (k.size() != md.m.dim()) throw SizeMismatch("kappa needs one matrix per basis vector of m");
  const auto e = static_cast<Eigen::Index>(spec.dim());
  for (const auto& x : k)
    if (x.rows() != e || x.cols() != e) throw SizeMismatch("kappa matrices must be square of one size");
  Coordinates cm(gaussian_basis(md.m), false);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      auto c = cm.solve(commutator<GaussianQ>(md.m.basis()[i], md.m.basis()[j]));
      if (!c) throw Error("m is not closed under brackets on the window");
      MatG img = zeros<GaussianQ>(e, e);
      for (std::size_t t = 0; t < k.size(); ++t) img += k[t] * (*c)[t];
      if (!(img == commutator<GaussianQ>(k[i], k[j]))) {
        throw Error("kappa does not respect the bracket of m_" + std::to_string(i) + " and m_" + std::to_string(j));
      }
    }
}

MatG p_character(const ManDecomp& md, const CharacterSpec& spec, const MatG& xi) {
  std::vector<MatG> basis = md.m.basis();
  basis.insert(basis.end(), md.a.basis().begin(), md.a.basis().end());
  basis.insert(basis.end(), md.n.basis().begin(), md.n.basis().end());
  auto c = Coordinates(basis, true).solve(xi);
  if (!c) throw Error("element is not in the parabolic on this window");
  const auto e = static_cast<Eigen::Index>(spec.dim());
  MatG out = zeros<GaussianQ>(e, e);
  for (std::size_t k = 0; k < md.m.dim(); ++k)
    if (spec.kappa) out += (*spec.kappa)[k] * (*c)[k];
  GaussianQ s(0);
  for (std::size_t j = 0; j < md.a.dim(); ++j) s += (*c)[md.m.dim() + j] * GaussianQ(spec.sigma.at(j));
  out += identity<GaussianQ>(e) * (s * GaussianQ(0, 1));
  return out;
}

// ---------------------------------------------------------------------------

class PbwEngine {
 public:
  PbwEngine(std::vector<MatQ> basis, std::size_t r, std::vector<MatG> deta, std::size_t e_dim)
      : basis_(std::move(basis)), r_(r), deta_(std::move(deta)), e_(static_cast<Eigen::Index>(e_dim)) {
    std::vector<MatG> gb;
    for (const auto& b : basis_) gb.push_back(to_gaussian(b));
    coords_ = Coordinates(gb, false);
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      std::vector<std::vector<Rational>> row;
      for (std::size_t i = 0; i < r_; ++i) row.push_back(rational_coords(commutator<Rational>(basis_[a], basis_[i])));
      ad_.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j)
        for (std::size_t k = r_; k < basis_.size(); ++k)
          if (ad_[i][j][k] != 0) throw Error("n- is not closed under brackets");
  }

  std::vector<GaussianQ> coords_of(const MatG& z) const {
    auto c = coords_.solve(z);
    if (!c) throw Error("element is not in the window algebra");
    return *c;
  }

  MatG deta(const MatG& z) const {
    auto c = coords_of(z);
    MatG out = zeros<GaussianQ>(e_, e_);
    for (std::size_t a = 0; a < r_; ++a)
      if (!(c[a] == GaussianQ(0))) throw Error("element is not in p");
    for (std::size_t a = r_; a < basis_.size(); ++a) out += deta_[a - r_] * c[a];
    return out;
  }

  const std::map<Monomial, Rational>& mul_y(int i, const Monomial& m) {
    auto key = std::make_pair(i, m);
    if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
    std::map<Monomial, Rational> out;
    auto add = [&](const Monomial& x, const Rational& c) {
      Rational& slot = out[x];
      slot += c;
      if (slot == 0) out.erase(x);
    };
    if (m.empty() || i <= m.front()) {
      Monomial x{i};
      x.insert(x.end(), m.begin(), m.end());
      add(x, 1);
    } else {
      // y_i y_j rest = y_j (y_i rest) + [y_i, y_j] rest
      int j = m.front();
      Monomial rest(m.begin() + 1, m.end());
      std::map<Monomial, Rational> inner = mul_y(i, rest);
      for (const auto& [b, c] : inner)
        for (const auto& [x, q] : std::map<Monomial, Rational>(mul_y(j, b))) add(x, c * q);
      const auto& br = ad_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (std::size_t k = 0; k < r_; ++k)
        if (br[k] != 0)
          for (const auto& [x, q] : std::map<Monomial, Rational>(mul_y(static_cast<int>(k), rest))) add(x, br[k] * q);
    }
    return mul_memo_.emplace(key, std::move(out)).first->second;
  }

  /// B_a applied to m (x) e_j for all j.
  const ModuleVector& act_basis(std::size_t a, const Monomial& m) {
    auto key = std::make_pair(a, m);
    if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
    ModuleVector out;
    if (m.empty()) {
      if (a < r_) {
        out.emplace(Monomial{static_cast<int>(a)}, identity<GaussianQ>(e_));
      } else if (!is_zero_block(deta_[a - r_])) {
        out.emplace(Monomial{}, deta_[a - r_]);
      }
    } else {
      // B_a y_i rest = y_i (B_a rest) + [B_a, y_i] rest
      int i = m.front();
      Monomial rest(m.begin() + 1, m.end());
      ModuleVector inner = act_basis(a, rest);
      for (const auto& [b, blk] : inner)
        for (const auto& [x, q] : std::map<Monomial, Rational>(mul_y(i, b))) add_into(out, x, MatG(blk * GaussianQ(q)));
      const auto& br = ad_[a][static_cast<std::size_t>(i)];
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (br[b] == 0) continue;
        ModuleVector part = act_basis(b, rest);
        for (const auto& [x, blk] : part) add_into(out, x, MatG(blk * GaussianQ(br[b])));
      }
    }
    return act_memo_.emplace(key, std::move(out)).first->second;
  }

  ModuleVector apply(const MatG& z, const ModuleVector& v) {
    auto c = coords_of(z);
    ModuleVector out;
    for (const auto& [m, blk] : v)
      for (std::size_t a = 0; a < basis_.size(); ++a) {
        if (c[a] == GaussianQ(0)) continue;
        ModuleVector part = act_basis(a, m);
        for (const auto& [x, b] : part) add_into(out, x, MatG(b * blk * c[a]));
      }
    return out;
  }

  std::size_t r() const { return r_; }
  Eigen::Index e() const { return e_; }
  const std::vector<MatQ>& basis() const { return basis_; }

 private:
  std::vector<Rational> rational_coords(const MatQ& z) const {
    auto c = coords_.solve(to_gaussian(z));
    if (!c) throw Error("bracket leaves the window algebra");
    std::vector<Rational> out;
    for (const auto& x : *c) out.push_back(x.re);
    return out;
  }

  std::vector<MatQ> basis_;
  std::size_t r_;
  std::vector<MatG> deta_;
  Eigen::Index e_;
  Coordinates coords_;
  std::vector<std::vector<std::vector<Rational>>> ad_;
  std::map<std::pair<int, Monomial>, std::map<Monomial, Rational>> mul_memo_;
  std::map<std::pair<std::size_t, Monomial>, ModuleVector> act_memo_;
};

// ---------------------------------------------------------------------------

namespace {

/// Root vectors spanning s: each element is split by the diagonal weight of
/// its entries.
std::vector<MatQ> root_vectors(const MatSpace<Rational>& s, const MatSpace<Rational>& torus) {
  const Eigen::Index n = s.n();
  using Weight = std::vector<Rational>;
  std::map<Weight, MatSpace<Rational>> spaces;
  for (const auto& b : s.basis()) {
    std::map<Weight, MatQ> parts;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        Weight w;
        for (const auto& d : torus.basis()) w.push_back(d(i, i) - d(j, j));
        auto [it, fresh] = parts.try_emplace(w, zeros<Rational>(n, n));
        it->second(i, j) = b(i, j);
      }
    for (auto& [w, m] : parts) spaces.try_emplace(w, MatSpace<Rational>(n)).first->second.add(m);
  }
  std::vector<MatQ> out;
  for (const auto& [w, sp] : spaces)
    for (const auto& b : sp.basis()) out.push_back(b);
  if (out.size() != s.dim()) throw Error("the space is not spanned by weight vectors");
  return out;
}

/// Height of the first nonzero entry (row-major), then the entry position.
std::tuple<Eigen::Index, Eigen::Index, Eigen::Index> height_key(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return {i - j, i, j};
  return {0, 0, 0};
}

void monomials_of_degree(int r, std::size_t k, int start, Monomial& cur, std::vector<Monomial>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < r; ++i) {
    cur.push_back(i);
    monomials_of_degree(r, k, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

InducedModule induced_module(const RealParabolic& rp, const Window& w, const CharacterSpec& spec, std::size_t d) {
  ManDecomp md = man_decompose(rp, w);
  check_character(md, spec);
  ChevalleyData ch = chevalley_truncation(rp.complex, w);
  MatSpace<Rational> g = complex_algebra(rp.form, w);
  MatSpace<Rational> nm(ch.p.n());
  for (const auto& x : ch.p_nil.basis()) nm.add(MatQ(x.transpose()));
  if (!nm.subset_of(g) || nm.dim() + ch.p.dim() != g.dim() || !((nm + ch.p) == g)) {
    throw Error("the window algebra does not split as n- + p");
  }
  MatSpace<Rational> torus = ch.p.kernel([&](const MatQ& m) -> Col<Rational> {
    Col<Rational> off(m.size());
    Eigen::Index t = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (i != j) off(t++) = m(i, j);
    return Col<Rational>(off.head(t));
  });
  InducedModule mod;
  mod.window = w;
  mod.degree = d;
  mod.e_dim = spec.dim();
  mod.n_minus = root_vectors(nm, torus);
  std::stable_sort(mod.n_minus.begin(), mod.n_minus.end(),
                   [](const MatQ& a, const MatQ& b) { return height_key(a) < height_key(b); });
  mod.p_basis = ch.p.basis();
  mod.generators = mod.n_minus;
  mod.generators.insert(mod.generators.end(), mod.p_basis.begin(), mod.p_basis.end());
  std::vector<MatG> deta;
  for (const auto& x : mod.p_basis) deta.push_back(p_character(md, spec, to_gaussian(x)));
  mod.engine = std::make_shared<PbwEngine>(mod.generators, mod.n_minus.size(), deta, mod.e_dim);
  const int r = static_cast<int>(mod.n_minus.size());
  for (std::size_t k = 0; k <= d; ++k) {
    Monomial cur;
    monomials_of_degree(r, k, 0, cur, mod.monomials);
  }
  for (const auto& z : mod.generators) {
    std::vector<bool> over;
    mod.action.push_back(mod.act(to_gaussian(z), &over));
    mod.overflow.push_back(std::move(over));
  }
  return mod;
}

std::vector<std::size_t> InducedModule::graded_dims() const {
  std::vector<std::size_t> out(degree + 1, 0);
  for (const auto& m : monomials) out[m.size()] += e_dim;
  return out;
}

ModuleVector InducedModule::basis_vector(const Monomial& m) const {
  return {{m, identity<GaussianQ>(static_cast<Eigen::Index>(e_dim))}};
}

ModuleVector InducedModule::apply(const MatG& z, const ModuleVector& v) const { return engine->apply(z, v); }

MatG InducedModule::act(const MatG& z, std::vector<bool>* overflow_out) const {
  const auto e = static_cast<Eigen::Index>(e_dim);
  const auto n = static_cast<Eigen::Index>(dim());
  std::map<Monomial, Eigen::Index> pos;
  for (std::size_t k = 0; k < monomials.size(); ++k) pos[monomials[k]] = static_cast<Eigen::Index>(k) * e;
  MatG out = zeros<GaussianQ>(n, n);
  std::vector<bool> over(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    ModuleVector img = engine->apply(z, basis_vector(monomials[k]));
    const Eigen::Index col = static_cast<Eigen::Index>(k) * e;
    bool escaped = std::any_of(img.begin(), img.end(), [&](const auto& kv) { return kv.first.size() > degree; });
    if (escaped) {
      for (Eigen::Index j = 0; j < e; ++j) over[static_cast<std::size_t>(col + j)] = true;
      continue;
    }
    for (const auto& [m, blk] : img) out.block(pos.at(m), col, e, e) = blk;
  }
  if (overflow_out) *overflow_out = std::move(over);
  return out;
}

bool same_vector(const ModuleVector& a, const ModuleVector& b) {
  ModuleVector diff = a;
  for (const auto& [m, blk] : b) add_into(diff, m, MatG(-blk));
  return diff.empty();
}

bool check_ad_twist(const InducedModule& mod, const MatG& xi, const Monomial& eta) {
  ModuleVector lhs = mod.apply(xi, mod.basis_vector(eta));
  ModuleVector rhs;
  for (std::size_t k = 0; k < eta.size(); ++k) {
    ModuleVector v = mod.basis_vector({});
    for (std::size_t t = eta.size(); t-- > 0;) {
      MatG y = to_gaussian(mod.n_minus[static_cast<std::size_t>(eta[t])]);
      v = mod.apply(t == k ? commutator<GaussianQ>(xi, y) : y, v);
    }
    for (const auto& [m, blk] : v) add_into(rhs, m, blk);
  }
  add_into(rhs, eta, mod.engine->deta(xi));
  return same_vector(lhs, rhs);
}

bool check_bracket_fidelity(const InducedModule& mod) {
  std::vector<MatG> gens;
  for (const auto& z : mod.generators) gens.push_back(to_gaussian(z));
  for (const auto& m : mod.monomials) {
    if (m.size() + 1 > mod.degree) continue;
    ModuleVector v = mod.basis_vector(m);
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        ModuleVector lhs = mod.apply(gens[a], mod.apply(gens[b], v));
        for (const auto& [x, blk] : mod.apply(gens[b], mod.apply(gens[a], v))) add_into(lhs, x, MatG(-blk));
        if (!same_vector(lhs, mod.apply(commutator<GaussianQ>(gens[a], gens[b]), v))) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool is_hermitian_contraction(const MatG& b) {
  if (b.rows() != b.cols()) return false;
  if (!(b == adjoint<GaussianQ>(b))) return false;
  const Eigen::Index n = b.rows();
  if (n > 20) throw Error("principal minor scan is limited to size 20");
  MatG c = MatG(identity<GaussianQ>(n) - b);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const auto k = static_cast<Eigen::Index>(idx.size());
    MatG sb(k, k), sc(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) {
        sb(i, j) = b(idx[i], idx[j]);
        sc(i, j) = c(idx[i], idx[j]);
      }
    if (determinant<GaussianQ>(sb).re < 0 || determinant<GaussianQ>(sc).re < 0) return false;
  }
  return true;
}

GaussianQ psi_b(const MatG& b, const MatG& x) {
  if (b.rows() != x.rows() || b.cols() != x.cols() || b.rows() != b.cols()) {
    throw SizeMismatch("B and x must be square of the same size");
  }
  if (!is_hermitian_contraction(b)) throw Error("B must be hermitian with 0 <= B <= I");
  return determinant<GaussianQ>(MatG(identity<GaussianQ>(b.rows()) - b + b * x));
}

bool voiculescu_check(const std::map<std::int64_t, Rational>& c, std::size_t n) {
  Rational total = 0;
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (const auto& [k, v] : c) {
    total += v;
    if (v == 0) continue;
    lo = any ? std::min(lo, k) : k;
    hi = any ? std::max(hi, k) : k;
    any = true;
  }
  if (total != 1) return false;
  auto at = [&](std::int64_t k) {
    auto it = c.find(k);
    return it == c.end() ? Rational(0) : it->second;
  };
  const auto wide = static_cast<std::int64_t>(n);
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::int64_t> m(size);
    std::function<bool(std::size_t, std::int64_t)> scan = [&](std::size_t i, std::int64_t top) {
      if (i == size) {
        const auto s = static_cast<Eigen::Index>(size);
        MatQ a(s, s);
        for (Eigen::Index r = 0; r < s; ++r)
          for (Eigen::Index q = 0; q < s; ++q) a(r, q) = at(m[static_cast<std::size_t>(r)] + q - r);
        return determinant<Rational>(a) >= 0;
      }
      for (std::int64_t v = top; v >= lo - wide; --v) {
        m[i] = v;
        if (!scan(i + 1, v)) return false;
      }
      return true;
    };
    if (!scan(0, hi + wide)) return false;
  }
  return true;
}

}  // namespace flagpar
