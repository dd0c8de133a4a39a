#include "flagpar/cutset.hpp"

#include <algorithm>

#include "flagpar/error.hpp"

namespace flagpar {

bool operator==(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return a.closed == b.closed && a.point == b.point;
}

namespace {

Bound at(const Index& i, bool closed) { return Bound{false, i, closed}; }
Bound inf() { return Bound{}; }

bool interval_empty(const Interval& v) {
  if (v.lo.infinite || v.hi.infinite) return false;
  if (v.hi.point < v.lo.point) return true;
  if (v.lo.point == v.hi.point) return !(v.lo.closed && v.hi.closed);
  return false;
}

// Order of lower bounds: -inf first, then by point, closed before open.
bool lo_before(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return a.infinite && !b.infinite;
  if (a.point != b.point) return a.point < b.point;
  return a.closed && !b.closed;
}

// The larger of two upper bounds.
Bound hi_max(const Bound& a, const Bound& b) {
  if (a.infinite) return a;
  if (b.infinite) return b;
  if (a.point != b.point) return a.point < b.point ? b : a;
  return a.closed ? a : b;
}

bool touches(const Bound& hi, const Bound& lo) {
  if (hi.infinite || lo.infinite) return true;
  if (lo.point < hi.point) return true;
  return lo.point == hi.point && (hi.closed || lo.closed);
}

void check_same(const CutSet& a, const CutSet& b) {
  if (a.domain() != b.domain()) {
    throw DomainMismatch("cut sets over " + to_string(a.domain()) + " and " + to_string(b.domain()));
  }
}

}  // namespace

void CutSet::normalize() {
  if (is_discrete(domain_)) {
    for (auto& v : iv_) {
      if (v.lo.infinite) {
        v.lo = at(*domain_min(domain_), true);
      } else if (!v.lo.closed) {
        v.lo = at(*successor(v.lo.point), true);
      }
      if (!v.hi.infinite && v.hi.closed) v.hi = at(*successor(v.hi.point), false);
    }
  }
  iv_.erase(std::remove_if(iv_.begin(), iv_.end(), interval_empty), iv_.end());
  std::sort(iv_.begin(), iv_.end(), [](const Interval& a, const Interval& b) { return lo_before(a.lo, b.lo); });
  std::vector<Interval> out;
  for (auto& v : iv_) {
    if (!out.empty() && touches(out.back().hi, v.lo)) {
      out.back().hi = hi_max(out.back().hi, v.hi);
    } else {
      out.push_back(v);
    }
  }
  iv_ = std::move(out);
}

CutSet CutSet::from_intervals(IndexDomain d, std::vector<Interval> iv) {
  CutSet s(d);
  for (const auto& v : iv) {
    if ((!v.lo.infinite && v.lo.point.domain() != d) || (!v.hi.infinite && v.hi.point.domain() != d)) {
      throw DomainMismatch("interval endpoint outside " + to_string(d));
    }
  }
  s.iv_ = std::move(iv);
  s.normalize();
  return s;
}

CutSet CutSet::full(IndexDomain d) { return from_intervals(d, {Interval{inf(), inf()}}); }

CutSet CutSet::finite(IndexDomain d, const std::vector<Index>& points) {
  std::vector<Interval> iv;
  for (const auto& p : points) iv.push_back({at(p, true), at(p, true)});
  return from_intervals(d, std::move(iv));
}

CutSet CutSet::less(const Index& c) { return from_intervals(c.domain(), {{inf(), at(c, false)}}); }
CutSet CutSet::less_equal(const Index& c) { return from_intervals(c.domain(), {{inf(), at(c, true)}}); }
CutSet CutSet::greater(const Index& c) { return from_intervals(c.domain(), {{at(c, false), inf()}}); }
CutSet CutSet::greater_equal(const Index& c) { return from_intervals(c.domain(), {{at(c, true), inf()}}); }

CutSet CutSet::range(const Index& lo, const Index& hi) {
  return from_intervals(lo.domain(), {{at(lo, true), at(hi, false)}});
}

CutSet CutSet::column(std::int64_t a) { return range(Index::colpair(1, a), Index::colpair(1, a + 1)); }

CutSet CutSet::nat_range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return empty(IndexDomain::Nat);
  return range(Index::nat(lo), Index::nat(hi + 1));
}

bool CutSet::contains(const Index& i) const {
  if (i.domain() != domain_) throw DomainMismatch("membership test across domains");
  for (const auto& v : iv_) {
    bool above = v.lo.infinite || v.lo.point < i || (v.lo.closed && v.lo.point == i);
    bool below = v.hi.infinite || i < v.hi.point || (v.hi.closed && v.hi.point == i);
    if (above && below) return true;
  }
  return false;
}

bool CutSet::is_full() const {
  return iv_.size() == 1 && iv_[0].hi.infinite &&
         (iv_[0].lo.infinite || (is_discrete(domain_) && iv_[0].lo.point == *domain_min(domain_)));
}

std::optional<std::size_t> CutSet::cardinality() const {
  std::size_t n = 0;
  for (const auto& v : iv_) {
    if (v.lo.infinite || v.hi.infinite) return std::nullopt;
    switch (domain_) {
      case IndexDomain::Rat:
        if (!(v.lo.point == v.hi.point)) return std::nullopt;
        n += 1;
        break;
      case IndexDomain::Nat:
        n += static_cast<std::size_t>(v.hi.point.nat_value() - v.lo.point.nat_value());
        break;
      case IndexDomain::ColPair:
        if (v.lo.point.col() != v.hi.point.col()) return std::nullopt;
        n += static_cast<std::size_t>(v.hi.point.row() - v.lo.point.row());
        break;
    }
  }
  return n;
}

std::vector<Index> CutSet::elements() const {
  if (!cardinality()) throw Error("elements() of an infinite cut set");
  std::vector<Index> out;
  for (const auto& v : iv_) {
    if (domain_ == IndexDomain::Rat) {
      out.push_back(v.lo.point);
      continue;
    }
    for (Index i = v.lo.point; i < v.hi.point; i = *successor(i)) out.push_back(i);
  }
  return out;
}

std::vector<Index> CutSet::restrict_to(const Window& w) const {
  std::vector<Index> out;
  for (const auto& i : w.indices)
    if (contains(i)) out.push_back(i);
  return out;
}

CutSet CutSet::complement() const {
  std::vector<Interval> out;
  Bound prev = inf();
  bool open_end = true;
  for (const auto& v : iv_) {
    if (!v.lo.infinite) out.push_back({prev, at(v.lo.point, !v.lo.closed)});
    if (v.hi.infinite) {
      open_end = false;
      break;
    }
    prev = at(v.hi.point, !v.hi.closed);
  }
  if (open_end) out.push_back({prev, inf()});
  return from_intervals(domain_, std::move(out));
}

CutSet CutSet::unite(const CutSet& o) const {
  check_same(*this, o);
  auto iv = iv_;
  iv.insert(iv.end(), o.iv_.begin(), o.iv_.end());
  return from_intervals(domain_, std::move(iv));
}

CutSet CutSet::intersect(const CutSet& o) const {
  check_same(*this, o);
  return complement().unite(o.complement()).complement();
}

bool CutSet::subset_of(const CutSet& o) const { return minus(o).is_empty(); }

bool operator==(const CutSet& a, const CutSet& b) {
  if (a.domain_ != b.domain_ || a.iv_.size() != b.iv_.size()) return false;
  for (std::size_t k = 0; k < a.iv_.size(); ++k) {
    if (!(a.iv_[k].lo == b.iv_[k].lo) || !(a.iv_[k].hi == b.iv_[k].hi)) return false;
  }
  return true;
}

bool cut_inclusion(const CutSet& s, const CutSet& t) {
  check_same(s, t);
  return s.subset_of(t);
}

namespace {

std::string interval_text(IndexDomain d, Interval v) {
  if (is_discrete(d) && !v.hi.infinite && *successor(v.lo.point) == v.hi.point) return "(fin " + to_string(v.lo.point) + ")";
  if (is_discrete(d) && v.lo.point == *domain_min(d)) v.lo = inf();
  if (v.lo.infinite && v.hi.infinite) return "(full)";
  if (v.lo.infinite) return "(ray " + std::string(v.hi.closed ? "le " : "lt ") + to_string(v.hi.point) + ")";
  if (v.hi.infinite) return "(ray " + std::string(v.lo.closed ? "ge " : "gt ") + to_string(v.lo.point) + ")";
  if (d == IndexDomain::Rat && v.lo.point == v.hi.point) return "(fin " + to_string(v.lo.point) + ")";
  return "(range (" + std::string(v.lo.closed ? "ge " : "gt ") + to_string(v.lo.point) + ") (" +
         (v.hi.closed ? "le " : "lt ") + to_string(v.hi.point) + "))";
}

std::string body_text(const CutSet& s) {
  const auto& iv = s.intervals();
  if (iv.empty()) return "(empty)";
  if (iv.size() == 1) return interval_text(s.domain(), iv[0]);
  std::string out = "(union";
  for (const auto& v : iv) out += " " + interval_text(s.domain(), v);
  return out + ")";
}

CutSet parse_body(const Sexp& e, IndexDomain d) {
  if (!e.is_list() || e.items.empty() || !e.items[0].is_atom) sexp_error(e, "expected a cut-set expression");
  const std::string& h = e.items[0].atom;
  auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1) sexp_error(e, "'" + h + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (h == "empty") {
    arity(0);
    return CutSet::empty(d);
  }
  if (h == "full") {
    arity(0);
    return CutSet::full(d);
  }
  if (h == "fin") {
    std::vector<Index> pts;
    for (std::size_t k = 1; k < e.items.size(); ++k) pts.push_back(parse_index(d, e.items[k]));
    return CutSet::finite(d, pts);
  }
  if (h == "ray") {
    arity(2);
    const auto& op = e.items[1];
    Index x = parse_index(d, e.items[2]);
    if (op.is_atom && op.atom == "lt") return CutSet::less(x);
    if (op.is_atom && op.atom == "le") return CutSet::less_equal(x);
    if (op.is_atom && op.atom == "gt") return CutSet::greater(x);
    if (op.is_atom && op.atom == "ge") return CutSet::greater_equal(x);
    sexp_error(op, "ray direction must be lt, le, gt or ge");
  }
  if (h == "range") {
    arity(2);
    const auto& a = e.items[1];
    const auto& b = e.items[2];
    if (!(a.head_is("ge") || a.head_is("gt")) || a.items.size() != 2) sexp_error(a, "expected (ge x) or (gt x)");
    if (!(b.head_is("le") || b.head_is("lt")) || b.items.size() != 2) sexp_error(b, "expected (le x) or (lt x)");
    Interval v{at(parse_index(d, a.items[1]), a.head_is("ge")), at(parse_index(d, b.items[1]), b.head_is("le"))};
    return CutSet::from_intervals(d, {v});
  }
  if (h == "column") {
    arity(1);
    if (d != IndexDomain::ColPair) sexp_error(e, "'column' needs the colpair domain");
    try {
      return CutSet::column(std::stoll(e.items[1].atom));
    } catch (const std::exception&) {
      sexp_error(e.items[1], "bad column number");
    }
  }
  if (h == "compl") {
    arity(1);
    return parse_body(e.items[1], d).complement();
  }
  if (h == "union" || h == "inter") {
    CutSet acc = h == "union" ? CutSet::empty(d) : CutSet::full(d);
    for (std::size_t k = 1; k < e.items.size(); ++k) {
      CutSet s = parse_body(e.items[k], d);
      acc = h == "union" ? acc.unite(s) : acc.intersect(s);
    }
    return acc;
  }
  sexp_error(e.items[0], "unknown cut-set operator '" + h + "'");
}

}  // namespace

std::string to_string(const CutSet& s) { return "(cut " + to_string(s.domain()) + " " + body_text(s) + ")"; }

CutSet parse_cutset(const Sexp& e, std::optional<IndexDomain> d) {
  if (e.head_is("cut")) {
    if (e.items.size() != 3 || !e.items[1].is_atom) sexp_error(e, "expected (cut <domain> <expr>)");
    IndexDomain dom;
    try {
      dom = parse_domain(e.items[1].atom);
    } catch (const Error& ex) {
      sexp_error(e.items[1], ex.what());
    }
    if (d && *d != dom) sexp_error(e.items[1], "cut set domain does not match the system");
    return parse_body(e.items[2], dom);
  }
  if (!d) sexp_error(e, "expected (cut <domain> <expr>)");
  return parse_body(e, *d);
}

CutSet parse_cutset(const std::string& text) { return parse_cutset(parse_sexp(text)); }

}  // namespace flagpar
