#include "fc/angle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "fc/error.hpp"

namespace fc {

double Angle::to_radians() const {
  if (is_exact()) return multiple().to_double() * std::numbers::pi;
  return std::get<double>(v_);
}

bool Angle::is_zero() const {
  return is_exact() ? multiple().is_zero() : std::get<double>(v_) == 0.0;
}

Angle Angle::operator-() const {
  return is_exact() ? Angle(-multiple()) : Angle(-std::get<double>(v_));
}

Angle Angle::scaled(const Rational& f) const {
  return is_exact() ? Angle(multiple() * f) : Angle(std::get<double>(v_) * f.to_double());
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) return Angle(a.multiple() + b.multiple());
  return Angle(a.to_radians() + b.to_radians());
}

namespace {

// cos(j*pi/4) for j in [0, 8)
Coeff cos_eighth(int j) {
  switch (j) {
    case 0: return Coeff(Rational(1));
    case 1: return Coeff(SymbolicCoeff::sqrt2(Rational(1, 2)));
    case 2: return Coeff(Rational(0));
    case 3: return Coeff(SymbolicCoeff::sqrt2(Rational(-1, 2)));
    case 4: return Coeff(Rational(-1));
    case 5: return Coeff(SymbolicCoeff::sqrt2(Rational(-1, 2)));
    case 6: return Coeff(Rational(0));
    default: return Coeff(SymbolicCoeff::sqrt2(Rational(1, 2)));
  }
}

// Returns j in [0,8) with theta = j*pi/4 (mod 2pi), or -1 when off the grid.
int grid_index(const Rational& m) {
  Rational q = m * 4;
  if (!q.is_integer()) return -1;
  return static_cast<int>(((q.num() % 8) + 8) % 8);
}

}  // namespace

Coeff Angle::cos() const {
  if (is_exact()) {
    int j = grid_index(multiple());
    if (j >= 0) return cos_eighth(j);
  }
  return Coeff::real(std::cos(to_radians()));
}

Coeff Angle::sin() const {
  if (is_exact()) {
    int j = grid_index(multiple());
    // sin(x) = cos(x - pi/2)
    if (j >= 0) return cos_eighth((j + 6) % 8);
  }
  return Coeff::real(std::sin(to_radians()));
}

Angle Angle::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw Error("empty angle");
  auto p = s.find("pi");
  if (p == std::string::npos) {
    if (s.find_first_of(".eE") == std::string::npos) {
      Rational r = Rational::parse(s);
      if (r.is_zero()) return Angle::pi(0);
      return Angle::radians(r.to_double());
    }
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw Error("bad angle: " + text);
      return Angle::radians(v);
    } catch (const std::logic_error&) {
      throw Error("bad angle: " + text);
    }
  }
  // [sign][num][*]pi[/den]
  std::string head = s.substr(0, p);
  std::string tail = s.substr(p + 2);
  if (!head.empty() && head.back() == '*') head.pop_back();
  Rational num(1);
  if (head == "-")
    num = Rational(-1);
  else if (head == "+" || head.empty())
    num = Rational(1);
  else
    num = Rational::parse(head);
  Rational den(1);
  if (!tail.empty()) {
    if (tail[0] != '/') throw Error("bad angle: " + text);
    den = Rational::parse(tail.substr(1));
  }
  return Angle::pi(num / den);
}

std::string Angle::str() const {
  if (!is_exact()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
    return buf;
  }
  const Rational& m = multiple();
  if (m.is_zero()) return "0";
  std::string n = m.num() == 1 ? "" : m.num() == -1 ? "-" : std::to_string(m.num());
  std::string s = n + "pi";
  if (m.den() != 1) s += "/" + std::to_string(m.den());
  return s;
}

bool angle_is_clifford(const Angle& theta, Algebra algebra) {
  if (!theta.is_exact()) return false;
  Rational step = algebra == Algebra::Fermion ? Rational(1, 2) : Rational(1, 4);
  return (theta.multiple() / step).is_integer();
}

}  // namespace fc
