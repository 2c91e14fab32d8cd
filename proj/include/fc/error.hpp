#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on registers of different widths.
class WidthMismatch : public Error {
 public:
  WidthMismatch(std::size_t a, std::size_t b)
      : Error("register width mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// Exact arithmetic left its representable domain (int64 overflow, symbol products, ...).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A value required numerically carries a symbol with no binding.
class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name) : Error("unbound symbol: " + name) {}
};

// Violated an invariant the math guarantees; indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class SizeGuard : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace fc
