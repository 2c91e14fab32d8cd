#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "fc/rational.hpp"

namespace fc {

using Bindings = std::map<std::string, double>;

// Shortest round-tripping decimal text; always contains '.' or an exponent.
std::string float_text(double x);

// One basis element of a SymbolicCoeff: an optional named symbol times an optional sqrt(2).
struct Monomial {
  std::string symbol;
  bool sqrt2 = false;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Real linear combination of opaque symbols over the rationals. sqrt2 is a
// distinguished atom obeying sqrt2*sqrt2 = 2; other symbol products are rejected.
class SymbolicCoeff {
 public:
  SymbolicCoeff() = default;
  SymbolicCoeff(Rational r);  // NOLINT(google-explicit-constructor)
  SymbolicCoeff(std::int64_t n) : SymbolicCoeff(Rational(n)) {}  // NOLINT

  static SymbolicCoeff symbol(const std::string& name, Rational r = 1);
  static SymbolicCoeff sqrt2(Rational r = 1);
  static SymbolicCoeff monomial(const Monomial& m, Rational r);

  bool is_zero() const { return terms_.empty(); }
  bool has_symbols() const;
  std::set<std::string> symbols() const;
  Rational constant() const;
  Rational coefficient(const Monomial& m) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  SymbolicCoeff operator-() const;
  SymbolicCoeff& operator+=(const SymbolicCoeff& o);
  SymbolicCoeff& operator-=(const SymbolicCoeff& o);
  SymbolicCoeff& operator*=(const Rational& r);
  friend SymbolicCoeff operator+(SymbolicCoeff a, const SymbolicCoeff& b) { return a += b; }
  friend SymbolicCoeff operator-(SymbolicCoeff a, const SymbolicCoeff& b) { return a -= b; }
  friend SymbolicCoeff operator*(SymbolicCoeff a, const Rational& r) { return a *= r; }
  friend SymbolicCoeff operator*(const Rational& r, SymbolicCoeff a) { return a *= r; }
  friend SymbolicCoeff operator*(const SymbolicCoeff& a, const SymbolicCoeff& b);

  double evaluate(const Bindings& b = {}) const;

  // "1/4*v0101 - 1/2*h00"; zero renders "0".
  std::string str() const;

  friend bool operator==(const SymbolicCoeff&, const SymbolicCoeff&) = default;
  friend auto operator<=>(const SymbolicCoeff&, const SymbolicCoeff&) = default;

 private:
  void add_term(const Monomial& m, const Rational& r);
  std::map<Monomial, Rational> terms_;
};

struct ExactComplex {
  SymbolicCoeff re;
  SymbolicCoeff im;
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

// Ring element used by every operator sum. Exact and float operands mix by
// converting the exact side to float, which requires it to be symbol free.
class Coeff {
 public:
  Coeff() : v_(ExactComplex{}) {}
  Coeff(Rational r) : v_(ExactComplex{SymbolicCoeff(r), {}}) {}  // NOLINT
  Coeff(std::int64_t n) : Coeff(Rational(n)) {}                   // NOLINT
  Coeff(int n) : Coeff(Rational(n)) {}                            // NOLINT
  Coeff(SymbolicCoeff re, SymbolicCoeff im = {}) : v_(ExactComplex{std::move(re), std::move(im)}) {}  // NOLINT
  Coeff(std::complex<double> z) : v_(z) {}  // NOLINT

  static Coeff zero() { return Coeff(); }
  static Coeff one() { return Coeff(Rational(1)); }
  static Coeff i() { return Coeff(SymbolicCoeff{}, SymbolicCoeff(1)); }
  static Coeff symbol(const std::string& name, Rational r = 1) { return Coeff(SymbolicCoeff::symbol(name, r)); }
  static Coeff real(double x) { return Coeff(std::complex<double>(x, 0.0)); }
  // i^k
  static Coeff i_pow(int k);

  bool is_exact() const { return std::holds_alternative<ExactComplex>(v_); }
  bool is_zero() const;
  bool has_symbols() const;
  const ExactComplex& exact() const { return std::get<ExactComplex>(v_); }
  // Numeric value; throws UnboundSymbol if a symbol is present and not bound.
  std::complex<double> value(const Bindings& b = {}) const;
  Coeff to_float(const Bindings& b = {}) const { return Coeff(value(b)); }

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }

  Coeff conj() const;
  Coeff times_i_pow(int k) const;

  // Structural equality: exact values compare exactly, floats bitwise, mixed never equal.
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.v_ == b.v_; }
  bool approx(const Coeff& o, double tol, const Bindings& b = {}) const;

  // True for a single nonzero rational, sqrt2 multiple, or float; used to decide parentheses.
  bool is_atomic() const;
  std::string str() const;

 private:
  std::variant<ExactComplex, std::complex<double>> v_;
};

inline Coeff coeff_add(const Coeff& a, const Coeff& b) { return a + b; }

}  // namespace fc
