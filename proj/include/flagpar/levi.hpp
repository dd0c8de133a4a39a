#ifndef FLAGPAR_LEVI_HPP
#define FLAGPAR_LEVI_HPP

// Levi components sl(X_j, Y_j) (plus so(Z) / sp(Z) under a form), the taut
// couples rebuilt from them, Jordan decomposition of finite-rank operators and
// the window-level decomposition p = p_nil + (l + t).

#include <optional>
#include <string>
#include <vector>

#include "flagpar/parabolic.hpp"

namespace flagpar {

struct JBlock {
  std::size_t gap = 0;  // coarse gap of the V flag
  IpsPair pair;
  std::optional<std::size_t> quotient_dim;  // nullopt = infinite
};

/// IPS pairs with closed lower member and quotient of dimension > 1; under a
/// form the upper member must also be isotropic.
std::vector<JBlock> extract_J(const ParabolicDesc& p);

struct LeviBlock {
  CutSet x;
  CutSet y;
  friend bool operator==(const LeviBlock& a, const LeviBlock& b) { return a.x == b.x && a.y == b.y; }
};

struct LeviDatum {
  DualSystem system;
  Ambient ambient = Ambient::GL;
  std::vector<LeviBlock> blocks;
  std::optional<CutSet> z;

  friend bool operator==(const LeviDatum& a, const LeviDatum& b) {
    return a.ambient == b.ambient && a.blocks == b.blocks && a.z == b.z;
  }
};

std::string to_string(const LeviDatum& l);

LeviDatum levi_of(const ParabolicDesc& p);
/// Pairing and isotropy conditions on the blocks, checked on a window.
void check_levi_datum(const LeviDatum& l, const Window& w);

/// U_j = ((X_1 + ... + X_j)^perp + Y_j)^perp.
std::vector<CutSet> u_sets(const LeviDatum& l);
TautCouple minimal_taut_couple(const LeviDatum& l);
TautCouple maximal_taut_couple(const LeviDatum& l);
/// Normalizer of the maximal couple (self-taut flag under a form).
ParabolicDesc maximal_parabolic(const LeviDatum& l);

/// Coefficient matrices on w spanning sl(X_j, Y_j), or so/sp(Z) for the index
/// blocks.size().
MatSpace<Rational> levi_block_space(const LeviDatum& l, std::size_t block, const Window& w);

struct JordanParts {
  FinOp ss;
  FinOp nil;
  Poly<Rational> poly;  // ss = poly(op), no constant term
};

JordanParts jordan_decompose(const DualSystem& sys, const FinOp& op);
/// Same iteration on a square matrix: returns (S, N).
std::pair<MatQ, MatQ> jordan_matrix(const MatQ& a);
Poly<Rational> squarefree_part(const Poly<Rational>& f);

struct ChevalleyData {
  Window window;
  MatSpace<Rational> p;  // operator matrices
  MatSpace<Rational> radical;
  MatSpace<Rational> p_nil;
  MatSpace<Rational> p_red;
  MatSpace<Rational> l;
  MatSpace<Rational> t;
};

ChevalleyData chevalley_truncation(const ParabolicDesc& p, const Window& w);

struct ChevalleyCheck {
  bool ok = true;
  std::string failure;
};

ChevalleyCheck verify_chevalley(const ChevalleyData& c);

}  // namespace flagpar

#endif  // FLAGPAR_LEVI_HPP
