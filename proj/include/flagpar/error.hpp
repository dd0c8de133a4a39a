#ifndef FLAGPAR_ERROR_HPP
#define FLAGPAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flagpar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class SideMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedKernel : public Error {
 public:
  using Error::Error;
};

class MissingForm : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a finite operator has support outside the requested window.
class SupportOutsideWindow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace flagpar

#endif  // FLAGPAR_ERROR_HPP
