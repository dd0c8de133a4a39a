#ifndef FLAGPAR_INDEX_HPP
#define FLAGPAR_INDEX_HPP

// Countable totally ordered index sets for bases of V and W.
//
//   Nat      positive integers in the usual order
//   Rat      rationals in the usual order
//   ColPair  pairs (row, col) of positive integers, ordered by col then row
//
// ColPair is well ordered of type omega^2: column a is enumerated before
// column a+1, so (1, a+1) is a limit point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagpar/scalar.hpp"
#include "flagpar/sexpr.hpp"

namespace flagpar {

enum class IndexDomain { Nat, Rat, ColPair };

enum class Order { LT, EQ, GT };

std::string to_string(IndexDomain d);
IndexDomain parse_domain(const std::string& name);

/// An element of one of the index domains. Immutable value type.
class Index {
 public:
  static Index nat(std::int64_t n);
  static Index rat(Rational q);
  static Index colpair(std::int64_t row, std::int64_t col);

  IndexDomain domain() const { return domain_; }
  std::int64_t nat_value() const { return a_; }
  const Rational& rat_value() const { return q_; }
  std::int64_t row() const { return a_; }
  std::int64_t col() const { return b_; }

  friend bool operator==(const Index& x, const Index& y);
  friend bool operator!=(const Index& x, const Index& y) { return !(x == y); }
  // Strict order; throws DomainMismatch across domains.
  friend bool operator<(const Index& x, const Index& y);
  friend bool operator>(const Index& x, const Index& y) { return y < x; }
  friend bool operator<=(const Index& x, const Index& y) { return !(y < x); }
  friend bool operator>=(const Index& x, const Index& y) { return !(x < y); }

 private:
  Index() = default;
  IndexDomain domain_ = IndexDomain::Nat;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  Rational q_;
};

Order compare(const Index& i, const Index& j);

/// Least element, when the domain has one.
std::optional<Index> domain_min(IndexDomain d);
/// Immediate successor in the order, when it exists (Nat, ColPair).
std::optional<Index> successor(const Index& i);
/// Immediate predecessor; none at the minimum, at limit points and on Rat.
std::optional<Index> predecessor(const Index& i);
/// Some element strictly between a and b, if any.
std::optional<Index> element_between(const Index& a, const Index& b);
std::optional<Index> element_below(const Index& a);
Index element_above(const Index& a);
bool is_discrete(IndexDomain d);

std::string to_string(const Index& i);
Index parse_index(IndexDomain d, const Sexp& e);
Index parse_index(IndexDomain d, const std::string& text);

/// A finite strictly increasing list of indices used to truncate objects.
struct Window {
  IndexDomain domain = IndexDomain::Nat;
  std::vector<Index> indices;

  std::size_t size() const { return indices.size(); }
  bool contains(const Index& i) const;
  /// Position of an index inside the window; throws if absent.
  std::size_t position(const Index& i) const;
  Window merged(const std::vector<Index>& extra) const;
};

/// Nat: {1..n} plus extra. ColPair: the n x n block {(r, c) : r, c <= n} plus
/// extra. Rat: exactly the sorted extra list.
Window window(IndexDomain d, std::size_t n, const std::vector<Index>& extra = {});

}  // namespace flagpar

#endif  // FLAGPAR_INDEX_HPP
