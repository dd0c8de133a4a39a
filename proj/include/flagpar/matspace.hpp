#ifndef FLAGPAR_MATSPACE_HPP
#define FLAGPAR_MATSPACE_HPP

// Q-linear subspaces of n x n matrices. For rational matrices the Q-dimension
// is the complex dimension of the span; for Gaussian matrices the span is
// taken over Q as a model of a real span, so real forms are subspaces here.

#include <functional>
#include <vector>

#include "flagpar/matrix.hpp"

namespace flagpar {

template <typename S>
Col<Rational> coords(const Mat<S>& m) {
  constexpr int k = ScalarTraits<S>::real_dim;
  Col<Rational> c(k * m.size());
  Eigen::Index t = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (int r = 0; r < k; ++r) c(t++) = ScalarTraits<S>::coord(m(i, j), r);
  return c;
}

/// Incremental row echelon basis of a Q-subspace of Q^d.
class Reducer {
 public:
  explicit Reducer(Eigen::Index d = 0) : d_(d) {}

  /// Reduces v modulo the span; returns true and stores it if it was new.
  bool insert(Col<Rational> v) {
    reduce(v);
    Eigen::Index p = 0;
    while (p < d_ && v(p) == 0) ++p;
    if (p == d_) return false;
    Rational inv = Rational(1) / v(p);
    for (Eigen::Index j = p; j < d_; ++j)
      if (v(j) != 0) v(j) *= inv;
    for (auto& r : rows_) {
      if (r(p) != 0) {
        Rational f = r(p);
        for (Eigen::Index j = p; j < d_; ++j)
          if (v(j) != 0) r(j) -= f * v(j);
      }
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(Col<Rational> v) const {
    reduce(v);
    for (Eigen::Index j = 0; j < d_; ++j)
      if (v(j) != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Col<Rational>>& rows() const { return rows_; }

 private:
  void reduce(Col<Rational>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = v(piv_[k]);
      if (f == 0) continue;
      Rational c = f;
      const Col<Rational>& r = rows_[k];
      for (Eigen::Index j = piv_[k]; j < d_; ++j)
        if (r(j) != 0) v(j) -= c * r(j);
    }
  }

  Eigen::Index d_;
  std::vector<Col<Rational>> rows_;
  std::vector<Eigen::Index> piv_;
};

template <typename S>
class MatSpace {
 public:
  explicit MatSpace(Eigen::Index n = 0) : n_(n), red_(ScalarTraits<S>::real_dim * n * n) {}

  static MatSpace span(Eigen::Index n, const std::vector<Mat<S>>& gens) {
    MatSpace s(n);
    for (const auto& g : gens) s.add(g);
    return s;
  }

  bool add(const Mat<S>& m) {
    if (m.rows() != n_ || m.cols() != n_) throw SizeMismatch("matrix size does not match the space");
    if (!red_.insert(coords(m))) return false;
    basis_.push_back(m);
    return true;
  }

  Eigen::Index n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat<S>>& basis() const { return basis_; }
  bool contains(const Mat<S>& m) const { return red_.contains(coords(m)); }

  bool subset_of(const MatSpace& o) const {
    for (const auto& b : basis_)
      if (!o.contains(b)) return false;
    return true;
  }
  friend bool operator==(const MatSpace& a, const MatSpace& b) {
    return a.dim() == b.dim() && a.subset_of(b);
  }

  MatSpace operator+(const MatSpace& o) const {
    MatSpace s = *this;
    for (const auto& b : o.basis_) s.add(b);
    return s;
  }

  /// Elements sum c_k b_k with f(sum) = 0, f Q-linear into Q^m.
  MatSpace kernel(const std::function<Col<Rational>(const Mat<S>&)>& f) const {
    if (basis_.empty()) return *this;
    std::vector<Col<Rational>> cols;
    for (const auto& b : basis_) cols.push_back(f(b));
    MatQ a(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = cols[k];
    MatQ ns = nullspace<Rational>(a);
    MatSpace out(n_);
    for (Eigen::Index c = 0; c < ns.cols(); ++c) out.add(combine(ns.col(c)));
    return out;
  }

  Mat<S> combine(const Col<Rational>& c) const {
    Mat<S> m = zeros<S>(n_, n_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational& x = c(static_cast<Eigen::Index>(k));
      if (x != 0) m += basis_[k] * S(x);
    }
    return m;
  }

  MatSpace intersect(const MatSpace& o) const {
    // Reduce coordinates modulo o: x lies in o iff its residue is zero.
    std::vector<Col<Rational>> ortho = o.annihilator_rows();
    return kernel([&](const Mat<S>& m) {
      Col<Rational> v = coords(m);
      Col<Rational> out(static_cast<Eigen::Index>(ortho.size()));
      for (std::size_t k = 0; k < ortho.size(); ++k) out(static_cast<Eigen::Index>(k)) = ortho[k].dot(v);
      return out;
    });
  }

 private:
  // Functionals cutting out the space.
  std::vector<Col<Rational>> annihilator_rows() const {
    const Eigen::Index d = ScalarTraits<S>::real_dim * n_ * n_;
    MatQ a(static_cast<Eigen::Index>(red_.rank()), d);
    for (std::size_t k = 0; k < red_.rank(); ++k) a.row(static_cast<Eigen::Index>(k)) = red_.rows()[k].transpose();
    if (a.rows() == 0) {
      std::vector<Col<Rational>> all;
      for (Eigen::Index j = 0; j < d; ++j) {
        Col<Rational> e = Col<Rational>::Constant(d, Rational(0));
        e(j) = 1;
        all.push_back(e);
      }
      return all;
    }
    MatQ ns = nullspace<Rational>(a);
    std::vector<Col<Rational>> out;
    for (Eigen::Index c = 0; c < ns.cols(); ++c) out.push_back(ns.col(c));
    return out;
  }

  Eigen::Index n_;
  Reducer red_;
  std::vector<Mat<S>> basis_;
};

template <typename S>
MatSpace<S> bracket_space(const MatSpace<S>& a, const MatSpace<S>& b) {
  MatSpace<S> out(a.n());
  const std::size_t cap = ScalarTraits<S>::real_dim * a.n() * a.n();
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      out.add(commutator<S>(x, y));
      if (out.dim() == cap) return out;
    }
  return out;
}

template <typename S>
MatSpace<S> derived(const MatSpace<S>& a) {
  return bracket_space(a, a);
}

template <typename S>
bool is_subalgebra(const MatSpace<S>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!a.contains(commutator<S>(a.basis()[i], a.basis()[j]))) return false;
  return true;
}

/// [g, i] inside i.
template <typename S>
bool is_ideal(const MatSpace<S>& i, const MatSpace<S>& g) {
  for (const auto& x : g.basis())
    for (const auto& y : i.basis())
      if (!i.contains(commutator<S>(x, y))) return false;
  return true;
}

template <typename S>
bool is_solvable(MatSpace<S> a) {
  while (a.dim() > 0) {
    MatSpace<S> d = derived(a);
    if (d.dim() == a.dim()) return false;
    a = std::move(d);
  }
  return true;
}

template <typename S>
bool is_abelian(const MatSpace<S>& a) {
  return derived(a).dim() == 0;
}

/// {x in g : [x, y] = 0 for all y in s}.
template <typename S>
MatSpace<S> centralizer(const MatSpace<S>& g, const MatSpace<S>& s) {
  return g.kernel([&](const Mat<S>& x) {
    std::vector<Col<Rational>> parts;
    for (const auto& y : s.basis()) parts.push_back(coords<S>(commutator<S>(x, y)));
    Col<Rational> out(static_cast<Eigen::Index>(parts.size()) * (parts.empty() ? 0 : parts[0].size()));
    Eigen::Index t = 0;
    for (const auto& p : parts) {
      out.segment(t, p.size()) = p;
      t += p.size();
    }
    return out;
  });
}

inline Rational real_trace_product(const MatQ& a, const MatQ& b) { return trace<Rational>(MatQ(a * b)); }
inline Rational real_trace_product(const MatG& a, const MatG& b) { return trace<GaussianQ>(MatG(a * b)).re; }

/// Solvable radical: the trace-form orthogonal of [g, g] in g. For a linear
/// Lie algebra this is the largest solvable ideal.
template <typename S>
MatSpace<S> solvable_radical(const MatSpace<S>& g) {
  MatSpace<S> d = derived(g);
  return g.kernel([&](const Mat<S>& x) {
    Col<Rational> out(static_cast<Eigen::Index>(d.dim()));
    for (std::size_t k = 0; k < d.dim(); ++k) out(static_cast<Eigen::Index>(k)) = real_trace_product(x, d.basis()[k]);
    return out;
  });
}

/// Associative algebra (without unit) generated by a.
template <typename S>
MatSpace<S> associative_closure(const MatSpace<S>& a) {
  MatSpace<S> out = a;
  std::size_t done = 0;
  while (done < out.dim()) {
    std::size_t end = out.dim();
    for (std::size_t k = done; k < end; ++k)
      for (const auto& g : a.basis()) out.add(Mat<S>(out.basis()[k] * g));
    done = end;
  }
  return out;
}

inline Col<Rational> trace_coords(const MatQ& m) {
  Col<Rational> c(1);
  c(0) = trace<Rational>(m);
  return c;
}
inline Col<Rational> trace_coords(const MatG& m) {
  GaussianQ t = trace<GaussianQ>(m);
  Col<Rational> c(2);
  c(0) = t.re;
  c(1) = t.im;
  return c;
}

/// Elements of r acting nilpotently: r meets the radical of the associative
/// algebra it generates, cut out by tr(x b) = 0.
template <typename S>
MatSpace<S> nilpotent_part(const MatSpace<S>& r) {
  MatSpace<S> alg = associative_closure(r);
  return r.kernel([&](const Mat<S>& x) -> Col<Rational> {
    Col<Rational> out(2 * static_cast<Eigen::Index>(alg.dim()));
    Eigen::Index t = 0;
    for (const auto& b : alg.basis()) {
      Col<Rational> c = trace_coords(Mat<S>(x * b));
      for (Eigen::Index k = 0; k < c.size(); ++k) out(t++) = c(k);
    }
    return Col<Rational>(out.head(t));
  });
}

template <typename S>
bool is_nilpotent_matrix(const Mat<S>& m) {
  Mat<S> p = m;
  for (Eigen::Index k = 1; k < m.rows(); ++k) p = Mat<S>(p * m);
  return is_zero<S>(p);
}

}  // namespace flagpar

#endif  // FLAGPAR_MATSPACE_HPP
