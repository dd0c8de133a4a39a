#include "flagpar/index.hpp"

#include <algorithm>

#include "flagpar/error.hpp"

namespace flagpar {

std::string to_string(IndexDomain d) {
  switch (d) {
    case IndexDomain::Nat:
      return "nat";
    case IndexDomain::Rat:
      return "rat";
    case IndexDomain::ColPair:
      return "colpair";
  }
  return "?";
}

IndexDomain parse_domain(const std::string& name) {
  if (name == "nat") return IndexDomain::Nat;
  if (name == "rat") return IndexDomain::Rat;
  if (name == "colpair") return IndexDomain::ColPair;
  throw Error("unknown index domain '" + name + "'");
}

Index Index::nat(std::int64_t n) {
  if (n < 1) throw Error("Nat indices are positive integers");
  Index i;
  i.domain_ = IndexDomain::Nat;
  i.a_ = n;
  return i;
}

Index Index::rat(Rational q) {
  Index i;
  i.domain_ = IndexDomain::Rat;
  i.q_ = std::move(q);
  return i;
}

Index Index::colpair(std::int64_t row, std::int64_t col) {
  if (row < 1 || col < 1) throw Error("ColPair indices are pairs of positive integers");
  Index i;
  i.domain_ = IndexDomain::ColPair;
  i.a_ = row;
  i.b_ = col;
  return i;
}

bool operator==(const Index& x, const Index& y) {
  if (x.domain_ != y.domain_) return false;
  switch (x.domain_) {
    case IndexDomain::Nat:
      return x.a_ == y.a_;
    case IndexDomain::Rat:
      return x.q_ == y.q_;
    case IndexDomain::ColPair:
      return x.a_ == y.a_ && x.b_ == y.b_;
  }
  return false;
}

bool operator<(const Index& x, const Index& y) {
  if (x.domain_ != y.domain_) {
    throw DomainMismatch("cannot compare " + to_string(x.domain_) + " with " + to_string(y.domain_));
  }
  switch (x.domain_) {
    case IndexDomain::Nat:
      return x.a_ < y.a_;
    case IndexDomain::Rat:
      return x.q_ < y.q_;
    case IndexDomain::ColPair:
      return x.b_ != y.b_ ? x.b_ < y.b_ : x.a_ < y.a_;
  }
  return false;
}

Order compare(const Index& i, const Index& j) {
  if (i < j) return Order::LT;
  if (j < i) return Order::GT;
  return Order::EQ;
}

bool is_discrete(IndexDomain d) { return d != IndexDomain::Rat; }

std::optional<Index> domain_min(IndexDomain d) {
  switch (d) {
    case IndexDomain::Nat:
      return Index::nat(1);
    case IndexDomain::ColPair:
      return Index::colpair(1, 1);
    case IndexDomain::Rat:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Index> successor(const Index& i) {
  switch (i.domain()) {
    case IndexDomain::Nat:
      return Index::nat(i.nat_value() + 1);
    case IndexDomain::ColPair:
      return Index::colpair(i.row() + 1, i.col());
    case IndexDomain::Rat:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Index> predecessor(const Index& i) {
  switch (i.domain()) {
    case IndexDomain::Nat:
      if (i.nat_value() > 1) return Index::nat(i.nat_value() - 1);
      return std::nullopt;
    case IndexDomain::ColPair:
      if (i.row() > 1) return Index::colpair(i.row() - 1, i.col());
      return std::nullopt;
    case IndexDomain::Rat:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Index> element_between(const Index& a, const Index& b) {
  if (!(a < b)) return std::nullopt;
  if (a.domain() == IndexDomain::Rat) return Index::rat((a.rat_value() + b.rat_value()) / 2);
  auto s = successor(a);
  if (s && *s < b) return s;
  return std::nullopt;
}

std::optional<Index> element_below(const Index& a) {
  switch (a.domain()) {
    case IndexDomain::Rat:
      return Index::rat(a.rat_value() - 1);
    case IndexDomain::Nat:
      if (a.nat_value() > 1) return Index::nat(a.nat_value() - 1);
      return std::nullopt;
    case IndexDomain::ColPair:
      if (a.row() > 1) return Index::colpair(a.row() - 1, a.col());
      if (a.col() > 1) return Index::colpair(1, a.col() - 1);
      return std::nullopt;
  }
  return std::nullopt;
}

Index element_above(const Index& a) {
  if (a.domain() == IndexDomain::Rat) return Index::rat(a.rat_value() + 1);
  return *successor(a);
}

std::string to_string(const Index& i) {
  switch (i.domain()) {
    case IndexDomain::Nat:
      return std::to_string(i.nat_value());
    case IndexDomain::Rat:
      return i.rat_value().str();
    case IndexDomain::ColPair:
      return "(p " + std::to_string(i.row()) + " " + std::to_string(i.col()) + ")";
  }
  return "?";
}

Index parse_index(IndexDomain d, const Sexp& e) {
  try {
    switch (d) {
      case IndexDomain::Nat:
        if (!e.is_atom) sexp_error(e, "expected a positive integer index");
        return Index::nat(std::stoll(e.atom));
      case IndexDomain::Rat:
        if (!e.is_atom) sexp_error(e, "expected a rational index");
        return Index::rat(parse_rational(e.atom));
      case IndexDomain::ColPair:
        if (!e.head_is("p") || e.items.size() != 3) sexp_error(e, "expected (p row col)");
        return Index::colpair(std::stoll(e.items[1].atom), std::stoll(e.items[2].atom));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    sexp_error(e, std::string("bad index: ") + ex.what());
  }
  sexp_error(e, "bad index");
}

Index parse_index(IndexDomain d, const std::string& text) { return parse_index(d, parse_sexp(text)); }

bool Window::contains(const Index& i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::size_t Window::position(const Index& i) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), i);
  if (it == indices.end() || *it != i) throw SupportOutsideWindow("index " + to_string(i) + " not in window");
  return static_cast<std::size_t>(it - indices.begin());
}

Window Window::merged(const std::vector<Index>& extra) const {
  Window w = *this;
  for (const auto& e : extra) {
    if (e.domain() != domain) throw DomainMismatch("window index from another domain");
    w.indices.push_back(e);
  }
  std::sort(w.indices.begin(), w.indices.end());
  w.indices.erase(std::unique(w.indices.begin(), w.indices.end()), w.indices.end());
  return w;
}

Window window(IndexDomain d, std::size_t n, const std::vector<Index>& extra) {
  Window w{d, {}};
  auto k = static_cast<std::int64_t>(n);
  if (d == IndexDomain::Nat) {
    for (std::int64_t i = 1; i <= k; ++i) w.indices.push_back(Index::nat(i));
  } else if (d == IndexDomain::ColPair) {
    for (std::int64_t c = 1; c <= k; ++c)
      for (std::int64_t r = 1; r <= k; ++r) w.indices.push_back(Index::colpair(r, c));
  }
  return w.merged(extra);
}

}  // namespace flagpar
