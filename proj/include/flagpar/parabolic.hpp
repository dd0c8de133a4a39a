#ifndef FLAGPAR_PARABOLIC_HPP
#define FLAGPAR_PARABOLIC_HPP

// Parabolic subalgebras as normalizers of taut couples (or self-taut flags
// under a form) cut down by finitely many block trace conditions.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "flagpar/flags.hpp"

namespace flagpar {

/// Trace of the map induced on the block X: the sum over k in X of the
/// coefficient of v_k in op(v_k).
struct BlockFunctional {
  std::string id;
  CutSet x;
  CutSet y;  // the paired block on the other side
};

Rational evaluate(const DualSystem& sys, const BlockFunctional& f, const FinOp& op);

/// Block id -> coefficient; the row asks that the combination vanish.
using TraceRow = std::map<std::string, Rational>;

struct ParabolicDesc {
  DualSystem system;
  std::variant<TautCouple, SelfTautFlag> couple;
  Ambient ambient = Ambient::GL;
  std::vector<TraceRow> trace_rows;

  bool self_taut() const { return std::holds_alternative<SelfTautFlag>(couple); }
  /// The flags whose members must be preserved (both sides of a couple, or
  /// the self-taut flag read on both sides through the form).
  std::vector<GenFlag> flags() const;
};

ParabolicDesc make_parabolic(DualSystem sys, TautCouple c, std::vector<TraceRow> rows = {});
ParabolicDesc make_selftaut_parabolic(DualSystem sys, GenFlag f, Ambient a, std::vector<TraceRow> rows = {});
/// Couple (F, dual F) from a V-side flag.
ParabolicDesc normalizer_of(const DualSystem& sys, const GenFlag& v, std::vector<TraceRow> rows = {});

/// "total", "gap<k>" for finite quotients > 1 or infinite ones of a coarse
/// gap, "col<a>" for the ColPair columns a <= bound.
std::vector<BlockFunctional> infinite_trace_functionals(const ParabolicDesc& p, std::int64_t column_bound = 3);
/// Looks up a block id, generating column blocks on demand; throws Error for unknown ids.
BlockFunctional block_by_id(const ParabolicDesc& p, const std::string& id);

bool stabilizer_contains(const FinOp& op, const ParabolicDesc& p);

/// Window used for p: the flags' boundary points and form partners added.
Window extend_window(const ParabolicDesc& p, const Window& w);
std::vector<Col<Rational>> parabolic_rows(const ParabolicDesc& p, const Window& w);
/// Coefficient matrices on w (extended by extend_window is the caller's choice).
MatSpace<Rational> stabilizer_truncation(const ParabolicDesc& p, const Window& w);
Window level_window(const ParabolicDesc& p, std::size_t n);

/// Lie bracket of coefficient matrices for the system on the window.
MatQ window_bracket(const DualSystem& sys, const Window& w, const MatQ& a, const MatQ& b);
MatSpace<Rational> derived_window(const DualSystem& sys, const Window& w, const MatSpace<Rational>& a);
bool is_closed_under_bracket(const DualSystem& sys, const Window& w, const MatSpace<Rational>& a);

struct SolvableVerdict {
  bool solvable = false;
  std::size_t level = 0;
  std::vector<std::size_t> derived_dims;
};

SolvableVerdict is_locally_solvable(const ParabolicDesc& p, std::size_t level);
SolvableVerdict is_solvable_on(const DualSystem& sys, const Window& w, const MatSpace<Rational>& a);

struct Ambiguity {
  bool unique = true;
  CutSet l;
  std::vector<GenFlag> flags;  // base, base + M1, base + M2 when not unique
};

/// Needs a symmetric form and an isotropic proper member.
Ambiguity so_flag_ambiguity(const DualSystem& sys, const GenFlag& f);

/// Chains of aligned isotropic subsets of a finite symmetric or alternating
/// system, closed under annihilators.
std::vector<GenFlag> aligned_selftaut_flags(const DualSystem& sys);

ParabolicDesc example_rational_borel();

}  // namespace flagpar

#endif  // FLAGPAR_PARABOLIC_HPP
