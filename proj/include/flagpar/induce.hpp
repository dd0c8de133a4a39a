#ifndef FLAGPAR_INDUCE_HPP
#define FLAGPAR_INDUCE_HPP

// Characters of p = m + a + n, modules U(g) (x)_{U(p)} E induced at a finite
// window and cut at a PBW degree, and the determinant and minor tests for
// characters of the infinite unitary group.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "flagpar/realform.hpp"

namespace flagpar {

struct CharacterSpec {
  std::vector<Rational> sigma;             // sigma(a_j) on the window basis of a
  std::optional<std::vector<MatG>> kappa;  // kappa(m_k) on the window basis of m; nullopt = trivial

  std::size_t dim() const;
};

/// Throws Error unless kappa is a representation of m on the basis
/// (brackets of basis elements go to commutators) and the sizes match.
void check_character(const ManDecomp& md, const CharacterSpec& spec);

/// d eta(xi) = kappa(m-part) + i sigma(a-part) Id; xi must lie in the complex
/// span of p on the window.
MatG p_character(const ManDecomp& md, const CharacterSpec& spec, const MatG& xi);

using Monomial = std::vector<int>;  // nondecreasing indices into the ordered n- basis
/// Coefficient of each monomial: a dim E x dim E block whose column j is the
/// image of e_j.
using ModuleVector = std::map<Monomial, MatG>;

class PbwEngine;

struct InducedModule {
  Window window;
  std::size_t degree = 0;
  std::size_t e_dim = 1;
  std::vector<MatQ> n_minus;  // ordered by root height, then position
  std::vector<MatQ> p_basis;
  std::vector<Monomial> monomials;  // basis of the cut module, by degree
  std::vector<MatQ> generators;     // n_minus then p_basis
  std::vector<MatG> action;         // one matrix per generator
  std::vector<std::vector<bool>> overflow;  // per generator, per column: image leaves the degree bound
  std::shared_ptr<PbwEngine> engine;

  std::size_t dim() const { return monomials.size() * e_dim; }
  std::vector<std::size_t> graded_dims() const;
  /// Action matrix of any element of g_C; columns whose image leaves the bound
  /// are flagged and left zero.
  MatG act(const MatG& z, std::vector<bool>* overflow_out = nullptr) const;
  /// Exact action without the bound.
  ModuleVector apply(const MatG& z, const ModuleVector& v) const;
  ModuleVector basis_vector(const Monomial& m) const;
};

/// n- is the transpose of the nilradical; the window algebra must split as n- + p.
InducedModule induced_module(const RealParabolic& rp, const Window& w, const CharacterSpec& spec, std::size_t d);

bool same_vector(const ModuleVector& a, const ModuleVector& b);

/// xi (eta (x) e) = (ad(xi) eta) (x) e + eta (x) d eta(xi) e, evaluated in the module.
bool check_ad_twist(const InducedModule& mod, const MatG& xi, const Monomial& eta);
/// [pi(x), pi(y)] = pi([x, y]) on every basis vector of degree < d, for all
/// pairs of generators.
bool check_bracket_fidelity(const InducedModule& mod);

/// Sizes match and B is hermitian with every principal minor of B and I - B
/// nonnegative.
bool is_hermitian_contraction(const MatG& b);
/// det((I - B) + B x).
GaussianQ psi_b(const MatG& b, const MatG& x);

/// Sum c_n = 1 and det(c_{m_i + j - i}) >= 0 for all m_1 >= ... >= m_k, k <= n,
/// drawn from the support of c widened by n on both sides.
bool voiculescu_check(const std::map<std::int64_t, Rational>& c, std::size_t n);

}  // namespace flagpar

#endif  // FLAGPAR_INDUCE_HPP
