#ifndef FLAGPAR_FLAGS_HPP
#define FLAGPAR_FLAGS_HPP

// Generalized flags of aligned subspaces.
//
// A flag is a strictly increasing coarse chain 0 = C_0 < C_1 < ... < C_m = U
// (U the universe) in which some gaps (C_k, C_k+1) are refined into single
// index steps. With D = C_k+1 \ C_k an ascending gap contributes the members
// C_k + (D and {< x}), C_k + (D and {<= x}) for x in D; a descending gap the
// members C_k + (D and {> x}), C_k + (D and {>= x}). Finite chains refine
// nothing; the ColPair column family and the rational cut family refine the
// single gap (0, U).

#include <optional>
#include <string>
#include <vector>

#include "flagpar/linear.hpp"
#include "flagpar/matspace.hpp"

namespace flagpar {

enum class Schema { FiniteChain, ColumnSchema, RationalCut, Refined };
enum class Direction { Ascending, Descending };
enum class Ambient { GL, SO, SP };

std::string to_string(Schema s);
std::string to_string(Ambient a);

struct RefinedGap {
  std::size_t gap = 0;
  Direction dir = Direction::Ascending;
};

struct IpsPair {
  CutSet lower;
  CutSet upper;
};

class GenFlag {
 public:
  GenFlag() = default;
  /// Checked construction from a coarse chain that already contains 0 and U.
  GenFlag(Side side, Schema schema, std::vector<CutSet> chain, std::vector<RefinedGap> refined);

  /// Members in any order; 0 and the universe are added when missing.
  static GenFlag finite_chain(Side side, const DualSystem& sys, std::vector<CutSet> members);
  /// Initial segments {y < x} and {y <= x} of ColPair.
  static GenFlag column_schema(Side side, Direction dir = Direction::Ascending);
  /// Cuts {q < r} and {q <= r} of the rationals (descending: {q > r}, {q >= r}).
  static GenFlag rational_cut(Side side, Direction dir = Direction::Ascending);

  Side side() const { return side_; }
  Schema schema() const { return schema_; }
  IndexDomain domain() const { return chain_.front().domain(); }
  const std::vector<CutSet>& coarse() const { return chain_; }
  const std::vector<RefinedGap>& refined() const { return refined_; }
  const CutSet& universe() const { return chain_.back(); }
  std::optional<Direction> gap_direction(std::size_t gap) const;

  /// Finitely many members realizing every pattern of membership on the
  /// window and on the open cells between window points.
  std::vector<CutSet> members_near(const Window& w) const;
  /// IPS pairs (F', F'') with F'' \ F' meeting the window.
  std::vector<IpsPair> ips_pairs_near(const Window& w) const;
  bool is_member(const CutSet& s) const;
  bool has_immediate_neighbour(std::size_t coarse_index) const;
  /// Window covering the coarse boundary points (used as a default level).
  std::vector<Index> boundary_points() const;

  friend bool operator==(const GenFlag& a, const GenFlag& b);

 private:
  Side side_ = Side::V;
  Schema schema_ = Schema::FiniteChain;
  std::vector<CutSet> chain_;
  std::vector<RefinedGap> refined_;
};

std::string to_string(const GenFlag& f);

// ---- helpers on cut sets relative to a window ----

std::optional<Index> some_element(const CutSet& s);
std::optional<Index> min_element(const CutSet& s);
std::optional<Index> max_element(const CutSet& s);
/// Open cells between consecutive window points, below the first and above the last.
std::vector<CutSet> window_cells(const Window& w);
/// Window points of s and, when the kernel sees them, one point of s in each cell.
std::vector<Index> representatives(const DualSystem& sys, const CutSet& s, const Window& w);

struct ValidationReport {
  bool valid = true;
  std::string message;
  std::optional<Index> witness;
  std::vector<IpsPair> ips;
};

/// Chain order, duplicates, IPS existence and window coverage of a member list.
ValidationReport validate_chain(Side side, const DualSystem& sys, const std::vector<CutSet>& members, const Window& w);
ValidationReport validate_genflag(const DualSystem& sys, const GenFlag& f, const Window& w);

struct SemiclosedReport {
  bool holds = true;
  std::optional<CutSet> witness;
  std::string message;
};

SemiclosedReport is_semiclosed(const DualSystem& sys, const GenFlag& f, const Window& w);

/// Annihilator flag on the other side (finite chains, or refined gaps for
/// kernels whose annihilator is a complement or an order ray).
GenFlag dual_flag(const DualSystem& sys, const GenFlag& f);

// ---- stabilizer conditions as linear functionals on window coefficient matrices ----

/// Functionals on vec(C) (row-major) cutting out the coefficient matrices
/// that preserve every member of the flag near the window.
std::vector<Col<Rational>> stabilizer_rows(const DualSystem& sys, const GenFlag& f, const Window& w);
std::vector<Col<Rational>> ambient_rows(Ambient a, std::size_t n);
MatSpace<Rational> solve_rows(std::size_t n, const std::vector<Col<Rational>>& rows);
bool satisfies(const std::vector<Col<Rational>>& rows, const MatQ& c);

/// Window used for level-n checks: window(n) on Nat/ColPair made partner
/// closed for forms, plus the flags' boundary points.
Window level_window(const DualSystem& sys, std::size_t n, const std::vector<const GenFlag*>& flags);

struct TautCouple {
  GenFlag v;
  GenFlag w;
  std::optional<std::size_t> verified_level;
};

struct Verdict {
  bool holds = true;
  std::size_t level = 0;
  std::optional<FinOp> witness;
  std::string detail;
};

Verdict is_taut_couple(const DualSystem& sys, TautCouple& c, std::size_t level, Ambient a = Ambient::GL);

enum class Isotropy { Isotropic, Coisotropic, Both, Neither };
std::string to_string(Isotropy i);

struct SelfTautFlag {
  GenFlag flag;
  std::vector<Isotropy> classes;  // parallel to flag.coarse()
};

struct SelfTautVerdict {
  Verdict verdict;
  std::vector<Isotropy> classes;
  std::optional<CutSet> bad_member;
};

Isotropy classify(const DualSystem& sys, const CutSet& f);
SelfTautVerdict is_selftaut(const DualSystem& sys, const GenFlag& f, std::size_t level);

/// Column schema couple over ColPair with the delta pairing.
TautCouple example_limit_ordinal_couple();
DualSystem limit_ordinal_system();

}  // namespace flagpar

#endif  // FLAGPAR_FLAGS_HPP
