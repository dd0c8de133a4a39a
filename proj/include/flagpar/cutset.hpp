#ifndef FLAGPAR_CUTSET_HPP
#define FLAGPAR_CUTSET_HPP

// Decidable index predicates built from finite sets and order rays, closed
// under the boolean operations. Stored as a sorted list of disjoint,
// non-adjacent intervals; on Nat and ColPair every interval is normalized to
// the half-open form [lo, hi), so structural equality is set equality.

#include <optional>
#include <string>
#include <vector>

#include "flagpar/index.hpp"

namespace flagpar {

struct Bound {
  bool infinite = true;
  Index point = Index::nat(1);
  bool closed = false;
};

bool operator==(const Bound& a, const Bound& b);

struct Interval {
  Bound lo;  // infinite means -inf
  Bound hi;  // infinite means +inf
};

class CutSet {
 public:
  explicit CutSet(IndexDomain d = IndexDomain::Nat) : domain_(d) {}

  static CutSet empty(IndexDomain d) { return CutSet(d); }
  static CutSet full(IndexDomain d);
  static CutSet finite(IndexDomain d, const std::vector<Index>& points);
  static CutSet less(const Index& c);        // {i < c}
  static CutSet less_equal(const Index& c);  // {i <= c}
  static CutSet greater(const Index& c);
  static CutSet greater_equal(const Index& c);
  static CutSet range(const Index& lo, const Index& hi);  // [lo, hi)
  static CutSet column(std::int64_t a);                    // ColPair only
  static CutSet nat_range(std::int64_t lo, std::int64_t hi);  // {lo..hi}, inclusive

  IndexDomain domain() const { return domain_; }
  const std::vector<Interval>& intervals() const { return iv_; }

  bool contains(const Index& i) const;
  bool is_empty() const { return iv_.empty(); }
  bool is_full() const;
  /// Number of members; nullopt when infinite.
  std::optional<std::size_t> cardinality() const;
  /// The finitely many members, when finite.
  std::vector<Index> elements() const;
  /// Members inside a window, in window order.
  std::vector<Index> restrict_to(const Window& w) const;

  CutSet complement() const;
  CutSet unite(const CutSet& o) const;
  CutSet intersect(const CutSet& o) const;
  CutSet minus(const CutSet& o) const { return intersect(o.complement()); }
  bool subset_of(const CutSet& o) const;
  bool disjoint_from(const CutSet& o) const { return intersect(o).is_empty(); }

  friend bool operator==(const CutSet& a, const CutSet& b);
  friend bool operator!=(const CutSet& a, const CutSet& b) { return !(a == b); }

  static CutSet from_intervals(IndexDomain d, std::vector<Interval> iv);

 private:
  void normalize();
  IndexDomain domain_;
  std::vector<Interval> iv_;
};

bool cut_inclusion(const CutSet& s, const CutSet& t);

std::string to_string(const CutSet& s);
/// Parses an expression over a known domain, or `(cut <domain> <expr>)`.
CutSet parse_cutset(const Sexp& e, std::optional<IndexDomain> d = std::nullopt);
CutSet parse_cutset(const std::string& text);

}  // namespace flagpar

#endif  // FLAGPAR_CUTSET_HPP
