#ifndef FLAGPAR_SCALAR_HPP
#define FLAGPAR_SCALAR_HPP

// Exact scalars: rationals, Gaussian rationals a+bi and rational quaternions
// a+bi+cj+dk. All three are division rings; only the quaternions are
// noncommutative.

#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flagpar {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class Ring { Rational, Gaussian, Quaternion };

inline Rational parse_rational(std::string_view text) {
  Rational q{std::string(text)};
  if (mpz_sgn(mpq_denref(q.backend().data())) == 0) throw std::domain_error("zero denominator in " + std::string(text));
  mpq_canonicalize(q.backend().data());
  return q;
}

inline std::string to_string(const Rational& q) { return q.str(); }

template <typename T>
struct Gaussian {
  T re{0};
  T im{0};

  Gaussian() = default;
  Gaussian(int r) : re(r) {}  // NOLINT: implicit embedding of integers
  Gaussian(const T& r) : re(r) {}  // NOLINT: implicit embedding of the base field
  Gaussian(const T& r, const T& i) : re(r), im(i) {}

  static Gaussian i() { return {T(0), T(1)}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    T n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("Gaussian division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

template <typename T>
struct Quaternion {
  T a{0}, b{0}, c{0}, d{0};

  Quaternion() = default;
  Quaternion(int r) : a(r) {}  // NOLINT
  Quaternion(const T& r) : a(r) {}  // NOLINT
  Quaternion(const T& a_, const T& b_, const T& c_, const T& d_) : a(a_), b(b_), c(c_), d(d_) {}

  T norm2() const { return a * a + b * b + c * c + d * d; }

  Quaternion& operator+=(const Quaternion& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  // Right division x * y^{-1}.
  friend Quaternion operator/(const Quaternion& x, const Quaternion& y) {
    T n = y.norm2();
    if (n == 0) throw std::domain_error("Quaternion division by zero");
    Quaternion inv{y.a / n, -y.b / n, -y.c / n, -y.d / n};
    return x * inv;
  }
  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }
};

using GaussianQ = Gaussian<Rational>;
using QuaternionQ = Quaternion<Rational>;

inline const Rational& conj(const Rational& q) { return q; }
template <typename T>
Gaussian<T> conj(const Gaussian<T>& z) {
  return {z.re, -z.im};
}
template <typename T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return {q.a, -q.b, -q.c, -q.d};
}

inline bool is_zero(const Rational& q) { return q == 0; }
template <typename T>
bool is_zero(const Gaussian<T>& z) {
  return z.re == 0 && z.im == 0;
}
template <typename T>
bool is_zero(const Quaternion<T>& q) {
  return q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0;
}

/// Real part; used for real-valued trace forms on complex matrix spaces.
inline Rational real_part(const Rational& q) { return q; }
inline Rational real_part(const GaussianQ& z) { return z.re; }

std::string to_string(const GaussianQ& z);
std::string to_string(const QuaternionQ& q);
GaussianQ parse_gaussian(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const GaussianQ& z) { return os << to_string(z); }
inline std::ostream& operator<<(std::ostream& os, const QuaternionQ& q) { return os << to_string(q); }

/// Scalar traits for the generic exact linear algebra.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Ring ring = Ring::Rational;
  static constexpr int real_dim = 1;
  static Rational coord(const Rational& s, int) { return s; }
  static Rational from_coords(const Rational* c) { return c[0]; }
};

template <>
struct ScalarTraits<GaussianQ> {
  static constexpr Ring ring = Ring::Gaussian;
  static constexpr int real_dim = 2;
  static Rational coord(const GaussianQ& s, int k) { return k == 0 ? s.re : s.im; }
  static GaussianQ from_coords(const Rational* c) { return {c[0], c[1]}; }
};

}  // namespace flagpar

namespace Eigen {

template <>
struct NumTraits<flagpar::GaussianQ> : GenericNumTraits<flagpar::GaussianQ> {
  using Real = flagpar::Rational;
  using NonInteger = flagpar::GaussianQ;
  using Literal = flagpar::GaussianQ;
  using Nested = flagpar::GaussianQ;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<flagpar::QuaternionQ> : GenericNumTraits<flagpar::QuaternionQ> {
  using Real = flagpar::Rational;
  using NonInteger = flagpar::QuaternionQ;
  using Literal = flagpar::QuaternionQ;
  using Nested = flagpar::QuaternionQ;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace flagpar {

/// Complex realization q = z + w j  ->  [[z, w], [-conj(w), conj(z)]].
inline Eigen::Matrix<GaussianQ, 2, 2> complex_realization(const QuaternionQ& q) {
  Eigen::Matrix<GaussianQ, 2, 2> m;
  m(0, 0) = GaussianQ(q.a, q.b);
  m(0, 1) = GaussianQ(q.c, q.d);
  m(1, 0) = GaussianQ(-q.c, q.d);
  m(1, 1) = GaussianQ(q.a, -q.b);
  return m;
}

}  // namespace flagpar

#endif  // FLAGPAR_SCALAR_HPP
