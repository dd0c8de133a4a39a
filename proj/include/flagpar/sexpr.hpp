#ifndef FLAGPAR_SEXPR_HPP
#define FLAGPAR_SEXPR_HPP

#include <string>
#include <string_view>
#include <vector>

namespace flagpar {

/// Minimal s-expression: either an atom or a parenthesized list.
struct Sexp {
  bool is_atom = true;
  std::string atom;
  std::vector<Sexp> items;
  int line = 1;
  int column = 1;

  bool is_list() const { return !is_atom; }
  bool head_is(std::string_view h) const {
    return is_list() && !items.empty() && items[0].is_atom && items[0].atom == h;
  }
  std::string to_string() const;
};

/// Parses exactly one s-expression; trailing non-space input is an error.
Sexp parse_sexp(std::string_view text, int line_offset = 0, int column_offset = 0);

/// Parses every top-level expression in the text.
std::vector<Sexp> parse_sexps(std::string_view text, int line_offset = 0, int column_offset = 0);

[[noreturn]] void sexp_error(const Sexp& at, const std::string& what);

}  // namespace flagpar

#endif  // FLAGPAR_SEXPR_HPP
