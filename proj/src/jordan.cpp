#include "flagpar/levi.hpp"

namespace flagpar {

namespace {

using PolyQ = Poly<Rational>;

PolyQ poly_mod(const PolyQ& a, const PolyQ& m) { return poly_divmod(a, m).second; }

PolyQ poly_add(PolyQ a, const PolyQ& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  trim(a);
  return a;
}

/// f(s) modulo m.
PolyQ compose_mod(const PolyQ& f, const PolyQ& s, const PolyQ& m) {
  PolyQ r;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = poly_mod(poly_add(poly_mul(r, s), PolyQ{*it}), m);
  return r;
}

/// Inverse of a modulo m by the extended Euclidean algorithm.
PolyQ inverse_mod(const PolyQ& a, const PolyQ& m) {
  PolyQ r0 = m, r1 = poly_mod(a, m);
  PolyQ s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    PolyQ s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw Error("polynomial is not invertible modulo m");
  Rational c = Rational(1) / r0[0];
  for (auto& x : s0) x *= c;
  return poly_mod(s0, m);
}

/// s with f(s) = 0 mod m and s = t mod rad(m), where f = rad(m).
PolyQ semisimple_poly(const PolyQ& m) {
  PolyQ f = squarefree_part(m);
  PolyQ df = derivative(f);
  PolyQ s{Rational(0), Rational(1)};
  s = poly_mod(s, m);
  for (int it = 0; it < 64; ++it) {
    PolyQ fs = compose_mod(f, s, m);
    if (fs.empty()) return s;
    PolyQ step = poly_mod(poly_mul(fs, inverse_mod(compose_mod(df, s, m), m)), m);
    s = poly_sub(s, step);
  }
  throw Error("Jordan iteration did not converge");
}

}  // namespace

Poly<Rational> squarefree_part(const Poly<Rational>& f) {
  PolyQ g = poly_gcd(f, derivative(f));
  if (g.empty() || degree(g) == 0) return monic(f);
  return monic(poly_divmod(f, g).first);
}

std::pair<MatQ, MatQ> jordan_matrix(const MatQ& a) {
  if (a.rows() == 0) return {a, a};
  PolyQ s = semisimple_poly(charpoly<Rational>(a));
  MatQ ss = poly_eval<Rational>(s, a);
  return {ss, MatQ(a - ss)};
}

JordanParts jordan_decompose(const DualSystem& sys, const FinOp& op) {
  JordanParts out;
  out.nil = FinOp();
  if (op.is_zero()) return out;
  Window w = Window{sys.domain, {}}.merged(op.support());
  if (sys.has_form()) {
    std::vector<Index> partners;
    for (const auto& i : w.indices) partners.push_back(sys.partner(i));
    w = w.merged(partners);
  }
  // The op maps V into span(w), so t * charpoly kills it.
  MatQ a = operator_matrix(sys, op, w);
  PolyQ m = poly_mul(PolyQ{Rational(0), Rational(1)}, charpoly<Rational>(a));
  out.poly = semisimple_poly(m);
  if (!out.poly.empty() && out.poly[0] != 0) throw Error("semisimple part has a constant term");
  FinOp power = op;
  for (std::size_t k = 1; k < out.poly.size(); ++k) {
    if (out.poly[k] != 0) out.ss = out.ss + out.poly[k] * power;
    if (k + 1 < out.poly.size()) power = compose(sys, power, op);
  }
  out.nil = op - out.ss;
  return out;
}

}  // namespace flagpar
