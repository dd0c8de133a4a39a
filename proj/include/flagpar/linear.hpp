#ifndef FLAGPAR_LINEAR_HPP
#define FLAGPAR_LINEAR_HPP

// Paired spaces V x W -> Q with aligned bases {v_i}, {w_j}, finitely supported
// vectors and finite-rank operators sum c_ij v_i (x) w_j.
//
// Convention: a single bilinear pairing beta(v, w); the rank one operator
// v (x) w sends x to beta(x, w) v. When a form identifies W with V the basis
// vector w_j is e_j and beta(e_i, e_j) is the Gram entry G(i, j).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagpar/cutset.hpp"
#include "flagpar/matrix.hpp"

namespace flagpar {

enum class Side { V, W };
enum class Kernel { Delta, OrderStep };
enum class FormKind { None, Symmetric, Alternating, Hermitian };

std::string to_string(Side s);
std::string to_string(Kernel k);
std::string to_string(FormKind f);

inline Side other(Side s) { return s == Side::V ? Side::W : Side::V; }

/// Forms live on Nat in an adapted basis: e_{2k-1}, e_{2k} is the k-th
/// hyperbolic pair (k <= pairs), later indices form a definite part with Gram
/// entry +1. Alternating forms have no definite part.
struct DualSystem {
  IndexDomain domain = IndexDomain::Nat;
  Ring ring = Ring::Rational;
  Kernel kernel = Kernel::Delta;
  FormKind form = FormKind::None;
  std::optional<std::int64_t> pairs;      // hyperbolic pairs; nullopt = all of them
  std::optional<std::int64_t> dimension;  // finite universe {1..N}; nullopt = infinite
  std::int64_t signature = 0;             // Hermitian only: number of hyperbolic pairs of the real form

  static DualSystem delta(IndexDomain d, std::optional<std::int64_t> dim = std::nullopt);
  static DualSystem order_step(IndexDomain d);
  static DualSystem symmetric(std::optional<std::int64_t> pairs, std::optional<std::int64_t> dim);
  static DualSystem alternating(std::optional<std::int64_t> pairs, std::optional<std::int64_t> dim);

  bool has_form() const { return form == FormKind::Symmetric || form == FormKind::Alternating; }
  Rational beta(const Index& v, const Index& w) const;
  CutSet universe() const;
  /// Form partner of a basis index (identity when there is no form).
  Index partner(const Index& i) const;
  CutSet partner(const CutSet& s) const;
  /// Gram matrix G(k, j) = beta(v_k, w_j) over two windows.
  MatQ gram(const Window& wv, const Window& ww) const;
  MatQ gram(const Window& w) const { return gram(w, w); }
  void check_window(const Window& w) const;

  friend bool operator==(const DualSystem& a, const DualSystem& b);
};

std::string describe(const DualSystem& s);

struct Vec {
  Side side = Side::V;
  std::map<Index, Rational> coeff;

  static Vec basis(Side s, const Index& i);
  Vec& add(const Index& i, const Rational& c);
  bool is_zero() const { return coeff.empty(); }
  friend bool operator==(const Vec& a, const Vec& b) { return a.side == b.side && a.coeff == b.coeff; }
};

Vec operator+(Vec a, const Vec& b);
Vec operator*(const Rational& c, Vec a);

/// Finite-rank operator in coefficient form sum c_ij v_i (x) w_j. The sparse
/// coefficient map is canonical, so equality of maps is equality of operators.
class FinOp {
 public:
  FinOp() = default;
  static FinOp rank_one(const Index& v, const Index& w, const Rational& c = 1);
  static FinOp from_vecs(const Vec& v, const Vec& w);

  const std::map<std::pair<Index, Index>, Rational>& coeff() const { return c_; }
  FinOp& add(const Index& v, const Index& w, const Rational& c);
  bool is_zero() const { return c_.empty(); }
  std::vector<Index> v_support() const;
  std::vector<Index> w_support() const;
  /// Union of both supports, sorted.
  std::vector<Index> support() const;

  friend bool operator==(const FinOp& a, const FinOp& b) { return a.c_ == b.c_; }
  friend FinOp operator+(FinOp a, const FinOp& b);
  friend FinOp operator-(FinOp a, const FinOp& b);
  friend FinOp operator*(const Rational& s, FinOp a);

 private:
  std::map<std::pair<Index, Index>, Rational> c_;
};

std::string to_string(const FinOp& op);

Rational pair(const DualSystem& s, const Vec& v, const Vec& w);
Vec apply(const DualSystem& s, const FinOp& op, const Vec& x);
FinOp compose(const DualSystem& s, const FinOp& a, const FinOp& b);
FinOp bracket(const DualSystem& s, const FinOp& a, const FinOp& b);
Rational trace(const DualSystem& s, const FinOp& op);
/// v (x) v' - v' (x) v; needs a symmetric form.
FinOp skew(const DualSystem& s, const Vec& v, const Vec& vp);
/// v (x) v' + v' (x) v; needs an alternating form.
FinOp symm(const DualSystem& s, const Vec& v, const Vec& vp);

struct SubspaceDesc {
  Side side = Side::V;
  CutSet aligned;

  friend bool operator==(const SubspaceDesc& a, const SubspaceDesc& b) {
    return a.side == b.side && a.aligned == b.aligned;
  }
};

/// Aligned annihilator on the other side. For OrderStep this is the largest
/// aligned subspace inside the annihilator (exact on Rat).
SubspaceDesc annihilator(const DualSystem& s, const SubspaceDesc& x);
SubspaceDesc closure(const DualSystem& s, const SubspaceDesc& x);
CutSet annihilator(const DualSystem& s, Side side, const CutSet& x);
CutSet closure(const DualSystem& s, Side side, const CutSet& x);

/// Coefficient matrix on a window; throws SupportOutsideWindow.
MatQ truncate(const FinOp& op, const Window& w);
/// Operator matrix: column k is the image of v_k, i.e. C * G^T.
MatQ operator_matrix(const DualSystem& s, const FinOp& op, const Window& w);
std::vector<Index> truncate(const SubspaceDesc& x, const Window& w);
FinOp from_coefficients(const MatQ& c, const Window& w);
/// Inverse of operator_matrix when the window Gram matrix is invertible.
FinOp from_operator_matrix(const DualSystem& s, const MatQ& m, const Window& w);
/// Bracket of coefficient matrices: A G^T B - B G^T A.
MatQ twisted_bracket(const MatQ& a, const MatQ& b, const MatQ& gram_t);

}  // namespace flagpar

#endif  // FLAGPAR_LINEAR_HPP
