#include "flagpar/sexpr.hpp"

#include <cctype>

#include "flagpar/error.hpp"

namespace flagpar {

namespace {

class Reader {
 public:
  Reader(std::string_view text, int line, int column) : text_(text), line_(line + 1), col_(column + 1) {}

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  Sexp read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, col_);
    Sexp out;
    out.line = line_;
    out.column = col_;
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      advance();
      out.is_atom = false;
      while (true) {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unterminated list", out.line, out.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        out.items.push_back(read());
      }
      return out;
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      out.atom.push_back(d);
      advance();
    }
    return out;
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

}  // namespace

std::string Sexp::to_string() const {
  if (is_atom) return atom;
  std::string s = "(";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) s += ' ';
    s += items[k].to_string();
  }
  return s + ")";
}

Sexp parse_sexp(std::string_view text, int line_offset, int column_offset) {
  Reader r(text, line_offset, column_offset);
  Sexp s = r.read();
  if (!r.done()) throw ParseError("trailing input after expression", r.line(), r.column());
  return s;
}

std::vector<Sexp> parse_sexps(std::string_view text, int line_offset, int column_offset) {
  Reader r(text, line_offset, column_offset);
  std::vector<Sexp> out;
  while (!r.done()) out.push_back(r.read());
  return out;
}

void sexp_error(const Sexp& at, const std::string& what) {
  throw ParseError(what + " near '" + at.to_string() + "'", at.line, at.column);
}

}  // namespace flagpar
