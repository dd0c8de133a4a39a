#include "flagpar/linear.hpp"

#include <algorithm>
#include <set>

namespace flagpar {

std::string to_string(Side s) { return s == Side::V ? "V" : "W"; }
std::string to_string(Kernel k) { return k == Kernel::Delta ? "delta" : "order-step"; }
std::string to_string(FormKind f) {
  switch (f) {
    case FormKind::None:
      return "none";
    case FormKind::Symmetric:
      return "symmetric";
    case FormKind::Alternating:
      return "alternating";
    case FormKind::Hermitian:
      return "hermitian";
  }
  return "?";
}

DualSystem DualSystem::delta(IndexDomain d, std::optional<std::int64_t> dim) {
  DualSystem s;
  s.domain = d;
  if (dim && d != IndexDomain::Nat) throw Error("finite universes are only available on Nat");
  s.dimension = dim;
  return s;
}

DualSystem DualSystem::order_step(IndexDomain d) {
  DualSystem s;
  s.domain = d;
  s.kernel = Kernel::OrderStep;
  return s;
}

DualSystem DualSystem::symmetric(std::optional<std::int64_t> pairs, std::optional<std::int64_t> dim) {
  DualSystem s;
  s.form = FormKind::Symmetric;
  s.pairs = pairs;
  s.dimension = dim;
  if (pairs && dim && 2 * *pairs > *dim) throw Error("more hyperbolic pairs than the dimension allows");
  if (!pairs && dim && *dim % 2) throw Error("a fully hyperbolic space has even dimension");
  return s;
}

DualSystem DualSystem::alternating(std::optional<std::int64_t> pairs, std::optional<std::int64_t> dim) {
  DualSystem s = symmetric(pairs, dim);
  s.form = FormKind::Alternating;
  if (pairs && (!dim || 2 * *pairs != *dim)) throw Error("an alternating form has no definite part");
  return s;
}

bool operator==(const DualSystem& a, const DualSystem& b) {
  return a.domain == b.domain && a.ring == b.ring && a.kernel == b.kernel && a.form == b.form && a.pairs == b.pairs &&
         a.dimension == b.dimension && a.signature == b.signature;
}

std::string describe(const DualSystem& s) {
  std::string out = to_string(s.domain) + "/" + to_string(s.kernel) + "/" + to_string(s.form);
  if (s.has_form()) out += " pairs=" + (s.pairs ? std::to_string(*s.pairs) : std::string("inf"));
  if (s.dimension) out += " dim=" + std::to_string(*s.dimension);
  return out;
}

namespace {

bool in_pairs(const DualSystem& s, std::int64_t i) { return !s.pairs || i <= 2 * *s.pairs; }

}  // namespace

Rational DualSystem::beta(const Index& v, const Index& w) const {
  if (v.domain() != domain || w.domain() != domain) throw DomainMismatch("pairing across index domains");
  if (has_form()) {
    std::int64_t i = v.nat_value(), j = w.nat_value();
    if (in_pairs(*this, i) && in_pairs(*this, j)) {
      if (partner(v) != w) return 0;
      return form == FormKind::Alternating && i % 2 == 0 ? -1 : 1;
    }
    return i == j ? 1 : 0;
  }
  if (kernel == Kernel::OrderStep) return w < v ? 1 : 0;
  return v == w ? 1 : 0;
}

CutSet DualSystem::universe() const {
  if (dimension) return CutSet::nat_range(1, *dimension);
  return CutSet::full(domain);
}

Index DualSystem::partner(const Index& i) const {
  if (!has_form()) return i;
  std::int64_t k = i.nat_value();
  if (!in_pairs(*this, k)) return i;
  return Index::nat(k % 2 ? k + 1 : k - 1);
}

CutSet DualSystem::partner(const CutSet& s) const {
  if (!has_form()) return s;
  CutSet hyper = pairs ? CutSet::nat_range(1, 2 * *pairs) : CutSet::full(IndexDomain::Nat);
  CutSet out = s.minus(hyper);
  std::vector<Index> singles;
  const CutSet core = s.intersect(hyper);
  for (const auto& v : core.intervals()) {
    std::int64_t a = v.lo.point.nat_value();
    if (!v.hi.infinite && v.hi.point.nat_value() - a <= 4) {
      for (std::int64_t k = a; k < v.hi.point.nat_value(); ++k) singles.push_back(partner(Index::nat(k)));
      continue;
    }
    std::int64_t core_lo = a % 2 ? a : a + 1;
    if (a % 2 == 0) singles.push_back(Index::nat(a - 1));
    if (v.hi.infinite) {
      out = out.unite(CutSet::greater_equal(Index::nat(core_lo)));
    } else {
      std::int64_t b = v.hi.point.nat_value();
      std::int64_t core_hi = b % 2 ? b : b - 1;
      out = out.unite(CutSet::range(Index::nat(core_lo), Index::nat(core_hi)));
      if (b % 2 == 0) singles.push_back(Index::nat(b));
    }
  }
  return out.unite(CutSet::finite(IndexDomain::Nat, singles));
}

MatQ DualSystem::gram(const Window& wv, const Window& ww) const {
  MatQ g(static_cast<Eigen::Index>(wv.size()), static_cast<Eigen::Index>(ww.size()));
  for (std::size_t k = 0; k < wv.size(); ++k)
    for (std::size_t j = 0; j < ww.size(); ++j)
      g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = beta(wv.indices[k], ww.indices[j]);
  return g;
}

void DualSystem::check_window(const Window& w) const {
  if (w.domain != domain) throw DomainMismatch("window domain differs from the system");
  if (!has_form()) return;
  for (const auto& i : w.indices) {
    if (!universe().contains(i)) throw Error("window index " + to_string(i) + " outside the space");
    if (!w.contains(partner(i))) throw Error("window is not closed under the form partner of " + to_string(i));
  }
}

Vec Vec::basis(Side s, const Index& i) {
  Vec v;
  v.side = s;
  v.coeff[i] = 1;
  return v;
}

Vec& Vec::add(const Index& i, const Rational& c) {
  if (c == 0) return *this;
  auto it = coeff.find(i);
  if (it == coeff.end()) {
    coeff.emplace(i, c);
  } else if ((it->second += c) == 0) {
    coeff.erase(it);
  }
  return *this;
}

Vec operator+(Vec a, const Vec& b) {
  if (a.side != b.side) throw SideMismatch("adding vectors from V and W");
  for (const auto& [i, c] : b.coeff) a.add(i, c);
  return a;
}

Vec operator*(const Rational& c, Vec a) {
  if (c == 0) return Vec{a.side, {}};
  for (auto& [i, x] : a.coeff) x *= c;
  return a;
}

FinOp FinOp::rank_one(const Index& v, const Index& w, const Rational& c) {
  FinOp op;
  op.add(v, w, c);
  return op;
}

FinOp FinOp::from_vecs(const Vec& v, const Vec& w) {
  if (v.side != Side::V || w.side != Side::W) throw SideMismatch("rank one operators are v (x) w with v in V, w in W");
  FinOp op;
  for (const auto& [i, a] : v.coeff)
    for (const auto& [j, b] : w.coeff) op.add(i, j, a * b);
  return op;
}

FinOp& FinOp::add(const Index& v, const Index& w, const Rational& c) {
  if (v.domain() != w.domain()) throw DomainMismatch("operator term across domains");
  if (c == 0) return *this;
  auto key = std::make_pair(v, w);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, c);
  } else if ((it->second += c) == 0) {
    c_.erase(it);
  }
  return *this;
}

std::vector<Index> FinOp::v_support() const {
  std::set<Index> s;
  for (const auto& [k, c] : c_) s.insert(k.first);
  return {s.begin(), s.end()};
}

std::vector<Index> FinOp::w_support() const {
  std::set<Index> s;
  for (const auto& [k, c] : c_) s.insert(k.second);
  return {s.begin(), s.end()};
}

std::vector<Index> FinOp::support() const {
  std::set<Index> s;
  for (const auto& [k, c] : c_) {
    s.insert(k.first);
    s.insert(k.second);
  }
  return {s.begin(), s.end()};
}

FinOp operator+(FinOp a, const FinOp& b) {
  for (const auto& [k, c] : b.c_) a.add(k.first, k.second, c);
  return a;
}

FinOp operator-(FinOp a, const FinOp& b) {
  for (const auto& [k, c] : b.c_) a.add(k.first, k.second, -c);
  return a;
}

FinOp operator*(const Rational& s, FinOp a) {
  if (s == 0) return {};
  for (auto& [k, c] : a.c_) c *= s;
  return a;
}

std::string to_string(const FinOp& op) {
  std::string out = "(op";
  for (const auto& [k, c] : op.coeff()) out += " (t " + to_string(k.first) + " " + to_string(k.second) + " " + c.str() + ")";
  return out + ")";
}

Rational pair(const DualSystem& s, const Vec& v, const Vec& w) {
  if (v.side != Side::V || w.side != Side::W) throw SideMismatch("pair expects (V, W)");
  Rational r = 0;
  for (const auto& [i, a] : v.coeff)
    for (const auto& [j, b] : w.coeff) r += a * b * s.beta(i, j);
  return r;
}

Vec apply(const DualSystem& s, const FinOp& op, const Vec& x) {
  if (x.side != Side::V) throw SideMismatch("operators act on V");
  Vec out{Side::V, {}};
  for (const auto& [k, c] : op.coeff())
    for (const auto& [i, a] : x.coeff) out.add(k.first, c * a * s.beta(i, k.second));
  return out;
}

FinOp compose(const DualSystem& s, const FinOp& a, const FinOp& b) {
  FinOp out;
  for (const auto& [ka, ca] : a.coeff())
    for (const auto& [kb, cb] : b.coeff()) {
      Rational p = s.beta(kb.first, ka.second);
      if (p != 0) out.add(ka.first, kb.second, ca * cb * p);
    }
  return out;
}

FinOp bracket(const DualSystem& s, const FinOp& a, const FinOp& b) { return compose(s, a, b) - compose(s, b, a); }

Rational trace(const DualSystem& s, const FinOp& op) {
  Rational t = 0;
  for (const auto& [k, c] : op.coeff()) t += c * s.beta(k.first, k.second);
  return t;
}

namespace {

Vec as_w(const Vec& v) { return Vec{Side::W, v.coeff}; }

}  // namespace

FinOp skew(const DualSystem& s, const Vec& v, const Vec& vp) {
  if (s.form != FormKind::Symmetric) throw MissingForm("skew needs a symmetric form");
  return FinOp::from_vecs(v, as_w(vp)) - FinOp::from_vecs(vp, as_w(v));
}

FinOp symm(const DualSystem& s, const Vec& v, const Vec& vp) {
  if (s.form != FormKind::Alternating) throw MissingForm("symm needs an alternating form");
  return FinOp::from_vecs(v, as_w(vp)) + FinOp::from_vecs(vp, as_w(v));
}

CutSet annihilator(const DualSystem& s, Side side, const CutSet& x) {
  if (x.domain() != s.domain) throw DomainMismatch("subspace over another index domain");
  if (s.has_form()) return s.universe().minus(s.partner(x.intersect(s.universe())));
  if (s.kernel == Kernel::Delta) return s.universe().minus(x);
  // OrderStep: beta(v_q, w_r) = [q > r].
  if (x.is_empty()) return CutSet::full(s.domain);
  if (side == Side::V) {
    const Bound& hi = x.intervals().back().hi;
    if (hi.infinite) return CutSet::empty(s.domain);
    if (s.domain != IndexDomain::Rat) {
      if (auto p = predecessor(hi.point)) return CutSet::greater_equal(*p);
    }
    return CutSet::greater_equal(hi.point);
  }
  const Bound& lo = x.intervals().front().lo;
  if (lo.infinite) return CutSet::empty(s.domain);
  return CutSet::less_equal(lo.point);
}

CutSet closure(const DualSystem& s, Side side, const CutSet& x) {
  return annihilator(s, other(side), annihilator(s, side, x));
}

SubspaceDesc annihilator(const DualSystem& s, const SubspaceDesc& x) {
  return {other(x.side), annihilator(s, x.side, x.aligned)};
}

SubspaceDesc closure(const DualSystem& s, const SubspaceDesc& x) { return {x.side, closure(s, x.side, x.aligned)}; }

MatQ truncate(const FinOp& op, const Window& w) {
  MatQ c = zeros<Rational>(static_cast<Eigen::Index>(w.size()), static_cast<Eigen::Index>(w.size()));
  for (const auto& [k, x] : op.coeff()) {
    c(static_cast<Eigen::Index>(w.position(k.first)), static_cast<Eigen::Index>(w.position(k.second))) = x;
  }
  return c;
}

MatQ operator_matrix(const DualSystem& s, const FinOp& op, const Window& w) {
  return truncate(op, w) * s.gram(w).transpose();
}

std::vector<Index> truncate(const SubspaceDesc& x, const Window& w) { return x.aligned.restrict_to(w); }

FinOp from_coefficients(const MatQ& c, const Window& w) {
  FinOp op;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j)
      if (c(i, j) != 0) op.add(w.indices[static_cast<std::size_t>(i)], w.indices[static_cast<std::size_t>(j)], c(i, j));
  return op;
}

FinOp from_operator_matrix(const DualSystem& s, const MatQ& m, const Window& w) {
  MatQ gt = s.gram(w).transpose();
  return from_coefficients(MatQ(m * inverse<Rational>(gt)), w);
}

namespace {

// Products that skip zero entries; window matrices are mostly zero.
MatQ sparse_product(const MatQ& a, const MatQ& b) {
  MatQ out = MatQ::Constant(a.rows(), b.cols(), Rational(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

}  // namespace

MatQ twisted_bracket(const MatQ& a, const MatQ& b, const MatQ& gram_t) {
  MatQ out = sparse_product(sparse_product(a, gram_t), b);
  out -= sparse_product(sparse_product(b, gram_t), a);
  return out;
}

}  // namespace flagpar
