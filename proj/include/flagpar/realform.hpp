#ifndef FLAGPAR_REALFORM_HPP
#define FLAGPAR_REALFORM_HPP

// Real forms g_R = g^tau of the finitary complex algebras, with tau aligned to
// the adapted basis, real parabolics p_R = p^tau, and the Langlands style
// decomposition p_R = m + a + n of minimal ones.
//
// All window computations use operator matrices over Q(i); a real subspace is
// modelled as a Q-subspace of Gaussian matrices.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagpar/levi.hpp"

namespace flagpar {

enum class RealKind {
  Split,               // sl/gl(inf;R): tau = conj
  Quaternionic,        // sl/gl(inf;H): tau = J conj J^-1
  Unitary,             // su/u(p,inf): tau = -H^-1 x* H
  Orthogonal,          // so(p,inf): conj on the symmetric system with p pairs
  OrthogonalStar,      // so*(2inf)
  Symplectic,          // sp(inf;R): conj on the alternating system
  QuaternionicUnitary  // sp(p,inf)
};

std::string to_string(RealKind k);

struct RealStructure {
  std::string name;
  RealKind kind = RealKind::Split;
  bool special = false;             // trace zero (sl, su)
  std::optional<std::int64_t> p;    // signature parameter; nullopt = inf
  DualSystem system;                // the complex system carrying g_C
  Ambient ambient = Ambient::GL;

  bool hermitian() const;
  /// The division algebra of the defining hermitian form: "R", "C" or "H".
  std::string field() const;
};

/// Catalog names: sl(inf;R) gl(inf;R) sl(inf;H) gl(inf;H) su(p,inf) u(p,inf)
/// so(p,inf) so*(2inf) sp(inf;R) sp(p,inf), with p a number or inf.
RealStructure make_real_form(const std::string& name);

/// {1..n} closed under the form partner, the hermitian pairing and J.
Window real_window(const RealStructure& rs, std::size_t n, const std::vector<Index>& extra = {});

MatG tau(const RealStructure& rs, const Window& w, const MatG& x);
inline MatG theta(const MatG& x) { return MatG(-adjoint<GaussianQ>(x)); }

MatSpace<GaussianQ> complexify(const MatSpace<Rational>& s);
/// tau-fixed elements of the complex span of s (trace zero for special forms).
MatSpace<GaussianQ> real_points(const RealStructure& rs, const Window& w, const MatSpace<Rational>& s);
/// Operator matrices of g_C on the window.
MatSpace<Rational> complex_algebra(const RealStructure& rs, const Window& w);
MatSpace<GaussianQ> real_algebra(const RealStructure& rs, const Window& w);
/// Classical real dimension of g_R on a window of size n (the window of
/// real_window(rs, n) is meant; n must be closed already).
std::size_t classical_dimension(const RealStructure& rs, const Window& w);

/// The image of a subset of basis indices under the index map underlying tau
/// on flags: M, a pair swap of M, or the hermitian annihilator U \ pi(M).
CutSet tau_member(const RealStructure& rs, const CutSet& m);

class NotTauStable : public Error {
 public:
  NotTauStable(const std::string& what, CutSet witness) : Error(what), witness_(std::move(witness)) {}
  const CutSet& witness() const { return witness_; }

 private:
  CutSet witness_;
};

struct RealParabolic {
  ParabolicDesc complex;
  RealStructure form;
};

/// Throws NotTauStable with the first member whose image is not a member.
RealParabolic real_parabolic(const ParabolicDesc& p, const RealStructure& rs);
Window real_level_window(const RealParabolic& rp, std::size_t n);
MatSpace<Rational> complex_truncation(const RealParabolic& rp, const Window& w);
MatSpace<GaussianQ> real_truncation(const RealParabolic& rp, const Window& w);
bool real_contains(const RealParabolic& rp, const Window& w, const MatG& x);

struct RealBlock {
  std::string label;
  bool compact = false;
  std::vector<std::size_t> complex_blocks;  // one, or a swapped pair; blocks.size() is Z
  std::size_t dim = 0;                      // real dimension on the window
};

std::vector<RealBlock> real_levi(const RealParabolic& rp, std::size_t level = 6);
bool is_minimal_levi(const std::vector<RealBlock>& blocks);

struct CartanData {
  Window window;
  MatSpace<GaussianQ> g, k, s;
  bool coherent = false;   // theta of the smaller window is the restriction
  bool levi_in_k = false;
};

CartanData cartan_involution(const RealParabolic& rp, std::size_t n);

using Certificate = std::vector<std::pair<std::string, bool>>;
bool all_pass(const Certificate& c);

struct ManDecomp {
  Window window;
  MatSpace<GaussianQ> p, m, a, n, z, l_tilde;
  Certificate certificate;
};

ManDecomp man_decompose(const RealParabolic& rp, const Window& w);

/// Restricted root data at a window from the centralizer of a in g_R: the
/// nilradical dimension is half of dim g - dim g_0.
struct RootOracle {
  std::size_t dim_a = 0;
  std::size_t dim_g0 = 0;
  std::size_t dim_m = 0;
  std::size_t dim_n = 0;
};

RootOracle restricted_root_oracle(const RealStructure& rs, const Window& w, const MatSpace<GaussianQ>& a);

struct DaggerResult {
  RealParabolic p_dagger;
  bool fixed_point = false;
  Window window;
  CutSet x_f;
  std::vector<std::vector<Index>> x1, x2;  // the lines x'_l and x''_l on the window
  std::vector<Index> q;
  MatSpace<GaussianQ> a_dagger, t1, t2, l_tilde, m_dagger;
  Certificate certificate;
};

/// Needs a real form defined by a hermitian form over R, C or H.
DaggerResult construct_dagger(const RealParabolic& rp, std::size_t level = 4);

}  // namespace flagpar

#endif  // FLAGPAR_REALFORM_HPP
