#pragma once

#include <string>
#include <variant>

#include "fc/coeff.hpp"
#include "fc/rational.hpp"

namespace fc {

enum class Algebra { Pauli, Majorana, Fermion };

// Either an exact rational multiple of pi or a float in radians.
class Angle {
 public:
  Angle() : v_(Rational(0)) {}
  static Angle pi(Rational multiple) { return Angle(multiple); }
  static Angle radians(double value) { return Angle(value); }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& multiple() const { return std::get<Rational>(v_); }
  double to_radians() const;

  bool is_zero() const;
  Angle operator-() const;
  Angle scaled(const Rational& f) const;
  friend Angle operator+(const Angle& a, const Angle& b);

  // Exact on the pi/4 grid (sqrt2 tracked symbolically), float otherwise.
  Coeff cos() const;
  Coeff sin() const;
  // e^{i theta}
  Coeff expi() const { return cos() + Coeff::i() * sin(); }

  // "pi/2", "3pi/4", "-pi", "0", or a decimal radian value.
  static Angle parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  explicit Angle(Rational m) : v_(m) {}
  explicit Angle(double r) : v_(r) {}
  std::variant<Rational, double> v_;
};

// Pauli and Majorana conjugations are Clifford on the pi/4 grid, fermionic ones on the pi/2 grid.
bool angle_is_clifford(const Angle& theta, Algebra algebra);

}  // namespace fc
