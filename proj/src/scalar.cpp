#include "flagpar/scalar.hpp"

#include <stdexcept>

namespace flagpar {

namespace {

std::string signed_term(const Rational& c, const char* unit, bool first) {
  std::string s;
  Rational a = c;
  if (a < 0) {
    s += "-";
    a = -a;
  } else if (!first) {
    s += "+";
  }
  if (a != 1 || *unit == '\0') s += a.str();
  s += unit;
  return s;
}

}  // namespace

std::string to_string(const GaussianQ& z) {
  if (z.im == 0) return z.re.str();
  if (z.re == 0) return signed_term(z.im, "i", true);
  return z.re.str() + signed_term(z.im, "i", false);
}

std::string to_string(const QuaternionQ& q) {
  std::string s;
  const Rational* c[4] = {&q.a, &q.b, &q.c, &q.d};
  const char* u[4] = {"", "i", "j", "k"};
  for (int t = 0; t < 4; ++t) {
    if (*c[t] == 0) continue;
    s += signed_term(*c[t], u[t], s.empty());
  }
  return s.empty() ? "0" : s;
}

// Accepts a, bi, i, -i, a+bi, a-bi, a+i with rational a, b.
GaussianQ parse_gaussian(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty scalar");
  if (t.back() != 'i') return GaussianQ(parse_rational(t));
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (!im.empty() && im[0] == '+') im.erase(0, 1);
  return GaussianQ(parse_rational(re), parse_rational(im));
}

}  // namespace flagpar
