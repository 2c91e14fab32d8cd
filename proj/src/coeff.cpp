#include "fc/coeff.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>
#include <vector>

#include "fc/error.hpp"

namespace fc {

SymbolicCoeff::SymbolicCoeff(Rational r) {
  add_term(Monomial{}, r);
}

SymbolicCoeff SymbolicCoeff::symbol(const std::string& name, Rational r) {
  if (name.empty()) throw Error("empty symbol name");
  return monomial(Monomial{name, false}, r);
}

SymbolicCoeff SymbolicCoeff::sqrt2(Rational r) {
  return monomial(Monomial{"", true}, r);
}

SymbolicCoeff SymbolicCoeff::monomial(const Monomial& m, Rational r) {
  SymbolicCoeff s;
  s.add_term(m, r);
  return s;
}

void SymbolicCoeff::add_term(const Monomial& m, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SymbolicCoeff::has_symbols() const {
  for (const auto& [m, r] : terms_)
    if (!m.symbol.empty()) return true;
  return false;
}

std::set<std::string> SymbolicCoeff::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, r] : terms_)
    if (!m.symbol.empty()) out.insert(m.symbol);
  return out;
}

Rational SymbolicCoeff::constant() const {
  return coefficient(Monomial{});
}

Rational SymbolicCoeff::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolicCoeff SymbolicCoeff::operator-() const {
  SymbolicCoeff out = *this;
  for (auto& [m, r] : out.terms_) r = -r;
  return out;
}

SymbolicCoeff& SymbolicCoeff::operator+=(const SymbolicCoeff& o) {
  for (const auto& [m, r] : o.terms_) add_term(m, r);
  return *this;
}

SymbolicCoeff& SymbolicCoeff::operator-=(const SymbolicCoeff& o) {
  for (const auto& [m, r] : o.terms_) add_term(m, -r);
  return *this;
}

SymbolicCoeff& SymbolicCoeff::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= r;
  return *this;
}

SymbolicCoeff operator*(const SymbolicCoeff& a, const SymbolicCoeff& b) {
  SymbolicCoeff out;
  for (const auto& [ma, ra] : a.terms_) {
    for (const auto& [mb, rb] : b.terms_) {
      if (!ma.symbol.empty() && !mb.symbol.empty())
        throw ArithmeticError("product of symbols " + ma.symbol + " and " + mb.symbol + " is not linear");
      Monomial m{ma.symbol.empty() ? mb.symbol : ma.symbol, ma.sqrt2 != mb.sqrt2};
      Rational r = ra * rb;
      if (ma.sqrt2 && mb.sqrt2) r *= 2;
      out.add_term(m, r);
    }
  }
  return out;
}

double SymbolicCoeff::evaluate(const Bindings& b) const {
  double acc = 0.0;
  for (const auto& [m, r] : terms_) {
    double v = r.to_double();
    if (m.sqrt2) v *= std::numbers::sqrt2;
    if (!m.symbol.empty()) {
      auto it = b.find(m.symbol);
      if (it == b.end()) throw UnboundSymbol(m.symbol);
      v *= it->second;
    }
    acc += v;
  }
  return acc;
}

namespace {

// Magnitude text of one monomial, e.g. "1/4*v0101", "sqrt2", "3", "1/2*i*h00".
std::string monomial_text(const Monomial& m, const Rational& mag, bool imag) {
  std::vector<std::string> atoms;
  if (imag) atoms.emplace_back("i");
  if (m.sqrt2) atoms.emplace_back("sqrt2");
  if (!m.symbol.empty()) atoms.push_back(m.symbol);
  if (atoms.empty()) return mag.str();
  std::string body = atoms[0];
  for (std::size_t k = 1; k < atoms.size(); ++k) body += "*" + atoms[k];
  if (mag == Rational(1)) return body;
  return mag.str() + "*" + body;
}

void collect(const SymbolicCoeff& s, bool imag, std::vector<std::pair<bool, std::string>>& out) {
  for (const auto& [m, r] : s.terms()) {
    bool neg = r < Rational(0);
    out.emplace_back(neg, monomial_text(m, neg ? -r : r, imag));
  }
}

std::string join(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& [neg, text] = parts[k];
    if (k == 0)
      s += neg ? "-" + text : text;
    else
      s += (neg ? " - " : " + ") + text;
  }
  return s;
}

}  // namespace

std::string float_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

std::string SymbolicCoeff::str() const {
  std::vector<std::pair<bool, std::string>> parts;
  collect(*this, false, parts);
  return join(parts);
}

Coeff Coeff::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Coeff(Rational(1));
    case 1: return Coeff(SymbolicCoeff{}, SymbolicCoeff(1));
    case 2: return Coeff(Rational(-1));
    default: return Coeff(SymbolicCoeff{}, SymbolicCoeff(-1));
  }
}

bool Coeff::is_zero() const {
  if (is_exact()) return exact().re.is_zero() && exact().im.is_zero();
  return std::get<std::complex<double>>(v_) == std::complex<double>(0.0, 0.0);
}

bool Coeff::has_symbols() const {
  return is_exact() && (exact().re.has_symbols() || exact().im.has_symbols());
}

std::complex<double> Coeff::value(const Bindings& b) const {
  if (is_exact()) return {exact().re.evaluate(b), exact().im.evaluate(b)};
  return std::get<std::complex<double>>(v_);
}

Coeff Coeff::operator-() const {
  if (is_exact()) return Coeff(-exact().re, -exact().im);
  return Coeff(-std::get<std::complex<double>>(v_));
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (is_exact() && o.is_exact()) {
    auto& e = std::get<ExactComplex>(v_);
    e.re += o.exact().re;
    e.im += o.exact().im;
  } else {
    v_ = value() + o.value();
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  return *this += -o;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (is_exact() && o.is_exact()) {
    const auto& a = exact();
    const auto& b = o.exact();
    SymbolicCoeff re = a.re * b.re - a.im * b.im;
    SymbolicCoeff im = a.re * b.im + a.im * b.re;
    v_ = ExactComplex{std::move(re), std::move(im)};
  } else {
    v_ = value() * o.value();
  }
  return *this;
}

Coeff Coeff::conj() const {
  if (is_exact()) return Coeff(exact().re, -exact().im);
  return Coeff(std::conj(std::get<std::complex<double>>(v_)));
}

Coeff Coeff::times_i_pow(int k) const {
  switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 2: return -*this;
    default: break;
  }
  Coeff r;
  if (is_exact()) {
    // i*(re + i im) = -im + i re
    r = Coeff(-exact().im, exact().re);
  } else {
    r = Coeff(std::get<std::complex<double>>(v_) * std::complex<double>(0.0, 1.0));
  }
  return ((k % 4) + 4) % 4 == 1 ? r : -r;
}

bool Coeff::approx(const Coeff& o, double tol, const Bindings& b) const {
  return std::abs(value(b) - o.value(b)) <= tol;
}

bool Coeff::is_atomic() const {
  if (!is_exact()) return true;
  return exact().re.terms().size() + exact().im.terms().size() <= 1;
}

std::string Coeff::str() const {
  if (!is_exact()) {
    auto z = std::get<std::complex<double>>(v_);
    if (z.imag() == 0.0) return float_text(z.real());
    return "(" + float_text(z.real()) + "," + float_text(z.imag()) + ")";
  }
  std::vector<std::pair<bool, std::string>> parts;
  collect(exact().re, false, parts);
  collect(exact().im, true, parts);
  return join(parts);
}

}  // namespace fc
