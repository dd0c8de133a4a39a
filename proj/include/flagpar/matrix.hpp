#ifndef FLAGPAR_MATRIX_HPP
#define FLAGPAR_MATRIX_HPP

// Exact dense linear algebra on Eigen matrices with exact scalars. Only
// storage and products come from Eigen; elimination is done here since
// Eigen's decompositions pivot on magnitude.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "flagpar/error.hpp"
#include "flagpar/scalar.hpp"

namespace flagpar {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Col = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using MatG = Mat<GaussianQ>;

template <typename S>
Mat<S> zeros(Eigen::Index r, Eigen::Index c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <typename S>
Mat<S> identity(Eigen::Index n) {
  Mat<S> m = zeros<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <typename S>
bool is_zero(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
  return a * b - b * a;
}

template <typename S>
Mat<S> adjoint(const Mat<S>& m) {
  Mat<S> t(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t(j, i) = conj(m(i, j));
  return t;
}

template <typename S>
Mat<S> conjugate(const Mat<S>& m) {
  Mat<S> t(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t(i, j) = conj(m(i, j));
  return t;
}

template <typename S>
S trace(const Mat<S>& m) {
  S t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

inline MatG to_gaussian(const MatQ& m) {
  MatG g(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) g(i, j) = GaussianQ(m(i, j));
  return g;
}

template <typename S>
struct Echelon {
  Mat<S> r;
  std::vector<Eigen::Index> pivots;
};

/// Reduced row echelon form over a field.
template <typename S>
Echelon<S> rref(Mat<S> m) {
  std::vector<Eigen::Index> piv;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv = S(1) / m(row, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(piv)};
}

template <typename S>
Eigen::Index rank(const Mat<S>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Basis of the right kernel, one vector per column.
template <typename S>
Mat<S> nullspace(const Mat<S>& m) {
  auto e = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  Mat<S> out = zeros<S>(m.cols(), m.cols() - static_cast<Eigen::Index>(e.pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    out(f, k) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out(e.pivots[r], k) = -e.r(static_cast<Eigen::Index>(r), f);
    ++k;
  }
  return out;
}

/// Some solution of a x = b, if one exists.
template <typename S>
std::optional<Col<S>> solve(const Mat<S>& a, const Col<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto e = rref(aug);
  Col<S> x = Col<S>::Constant(a.cols(), S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.r(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

template <typename S>
Mat<S> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("inverse of a non-square matrix");
  Mat<S> aug(m.rows(), 2 * m.cols());
  aug << m, identity<S>(m.rows());
  auto e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < m.rows() || e.pivots.back() >= m.cols()) {
    throw Error("matrix is singular");
  }
  return e.r.rightCols(m.cols());
}

template <typename S>
S determinant(Mat<S> m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of a non-square matrix");
  S det(1);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Index p = c;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    S inv = S(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      S f = m(i, c) * inv;
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// ---- univariate polynomials, coefficients low degree first ----

template <typename S>
using Poly = std::vector<S>;

template <typename S>
void trim(Poly<S>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <typename S>
int degree(const Poly<S>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <typename S>
Poly<S> poly_sub(Poly<S> a, const Poly<S>& b) {
  if (a.size() < b.size()) a.resize(b.size(), S(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

template <typename S>
Poly<S> poly_mul(const Poly<S>& a, const Poly<S>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<S> c(a.size() + b.size() - 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

/// Quotient and remainder.
template <typename S>
std::pair<Poly<S>, Poly<S>> poly_divmod(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<S> q(a.size() - b.size() + 1, S(0));
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    S f = a[k + b.size() - 1] / b.back();
    q[k] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <typename S>
Poly<S> monic(Poly<S> p) {
  trim(p);
  if (p.empty()) return p;
  S lead = p.back();
  for (auto& c : p) c = c / lead;
  return p;
}

template <typename S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <typename S>
Poly<S> derivative(const Poly<S>& p) {
  Poly<S> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * S(static_cast<int>(k)));
  trim(d);
  return d;
}

template <typename S>
Mat<S> poly_eval(const Poly<S>& p, const Mat<S>& m) {
  Mat<S> r = zeros<S>(m.rows(), m.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = Mat<S>(r * m) + identity<S>(m.rows()) * *it;
  return r;
}

/// det(x I - m) by the Faddeev-LeVerrier recursion.
template <typename S>
Poly<S> charpoly(const Mat<S>& m) {
  const auto n = m.rows();
  Poly<S> c(n + 1, S(0));
  c[n] = S(1);
  Mat<S> mk = zeros<S>(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = Mat<S>(m * mk) + identity<S>(n) * c[n - k + 1];
    c[n - k] = -trace(Mat<S>(m * mk)) / S(static_cast<int>(k));
  }
  return c;
}

template <typename S>
Poly<S> minimal_polynomial(const Mat<S>& m) {
  // Smallest k with I, m, ..., m^k dependent.
  const auto n = m.rows();
  std::vector<Mat<S>> powers{identity<S>(n)};
  for (Eigen::Index k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    Mat<S> a(n * n, k);
    for (Eigen::Index j = 0; j < k; ++j) a.col(j) = Eigen::Map<const Col<S>>(powers[j].data(), n * n);
    Col<S> b = -Eigen::Map<const Col<S>>(powers[k].data(), n * n);
    if (auto x = solve<S>(a, b)) {
      Poly<S> p(x->data(), x->data() + k);
      p.push_back(S(1));
      return p;
    }
  }
  throw Error("minimal polynomial search failed");
}

// ---- plain-text matrix dumps ----

template <typename S>
S parse_scalar(const std::string& t);
template <>
inline Rational parse_scalar<Rational>(const std::string& t) {
  return parse_rational(t);
}
template <>
inline GaussianQ parse_scalar<GaussianQ>(const std::string& t) {
  return parse_gaussian(t);
}

/// "matrix R C" followed by R lines of C space-separated exact entries.
template <typename S>
std::string dump_matrix(const Mat<S>& m) {
  std::ostringstream os;
  os << "matrix " << m.rows() << " " << m.cols() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << "\n";
  }
  return os.str();
}

template <typename S>
Mat<S> parse_matrix(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  long r = -1, c = -1;
  if (!(is >> tag >> r >> c) || tag != "matrix" || r < 0 || c < 0) throw ParseError("expected 'matrix R C'", 1, 1);
  Mat<S> m(r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) {
      std::string tok;
      if (!(is >> tok)) throw ParseError("matrix dump ended early", static_cast<int>(i) + 2, 1);
      try {
        m(i, j) = parse_scalar<S>(tok);
      } catch (const std::exception&) {
        throw ParseError("bad entry '" + tok + "'", static_cast<int>(i) + 2, static_cast<int>(j) + 1);
      }
    }
  std::string extra;
  if (is >> extra) throw ParseError("trailing data after matrix", static_cast<int>(r) + 2, 1);
  return m;
}

}  // namespace flagpar

#endif  // FLAGPAR_MATRIX_HPP
