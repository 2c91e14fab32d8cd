#include "fc/pauli.hpp"

#include <bit>

#include "fc/error.hpp"

namespace fc {

namespace {

int mod4(int p) {
  return ((p % 4) + 4) % 4;
}

void check_width(const PauliString& a, const PauliString& b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
}

}  // namespace

PauliString::PauliString(BitVec x, BitVec z, int phase) : x_(std::move(x)), z_(std::move(z)), phase_(mod4(phase)) {
  if (x_.size() != z_.size()) throw WidthMismatch(x_.size(), z_.size());
}

PauliString PauliString::single(std::size_t n, std::size_t q, char op) {
  return from_ops(n, {{q, op}});
}

PauliString PauliString::from_ops(std::size_t n, const std::vector<std::pair<std::size_t, char>>& ops, int phase) {
  PauliString out(n);
  out.phase_ = mod4(phase);
  for (const auto& [q, c] : ops) {
    if (q >= n) throw Error("qubit index " + std::to_string(q) + " out of range for width " + std::to_string(n));
    PauliString f(n);
    switch (c) {
      case 'I': continue;
      case 'X': f.x_.set(q); break;
      case 'Y': f.x_.set(q); f.z_.set(q); break;
      case 'Z': f.z_.set(q); break;
      default: throw Error(std::string("unknown Pauli factor ") + c);
    }
    out = out * f;
  }
  return out;
}

char PauliString::op(std::size_t q) const {
  bool x = x_.get(q), z = z_.get(q);
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliString::label() const {
  std::string s;
  for (std::size_t q = 0; q < width(); ++q) {
    char c = op(q);
    if (c == 'I') continue;
    if (!s.empty()) s += ' ';
    s += c;
    s += std::to_string(q);
  }
  return s.empty() ? "I" : s;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  check_width(a, b);
  // Per-qubit phases: XY=iZ, YZ=iX, ZX=iY and the reverses give -i.
  const auto& ax = a.x_.words();
  const auto& az = a.z_.words();
  const auto& bx = b.x_.words();
  const auto& bz = b.z_.words();
  int phase = a.phase_ + b.phase_;
  for (std::size_t k = 0; k < ax.size(); ++k) {
    std::uint64_t X1 = ax[k] & ~az[k], Y1 = ax[k] & az[k], Z1 = ~ax[k] & az[k];
    std::uint64_t X2 = bx[k] & ~bz[k], Y2 = bx[k] & bz[k], Z2 = ~bx[k] & bz[k];
    std::uint64_t plus = (X1 & Y2) | (Y1 & Z2) | (Z1 & X2);
    std::uint64_t minus = (Y1 & X2) | (Z1 & Y2) | (X1 & Z2);
    phase += std::popcount(plus) - std::popcount(minus);
  }
  return PauliString(a.x_ ^ b.x_, a.z_ ^ b.z_, phase);
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  return a * b;
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  check_width(a, b);
  return dot(a.x(), b.z()) == dot(a.z(), b.x());
}

PauliSum pauli_exp(const Angle& theta, const PauliString& p) {
  if (p.phase() != 0) throw Error("exponent generator must be a phase-0 Pauli string");
  PauliSum out(p.width());
  out.add(PauliString::identity(p.width()), theta.cos());
  out.add(p, Coeff::i() * theta.sin());
  return out;
}

PauliSum pauli_conjugate(const PauliString& o, const PauliString& p, const Angle& theta) {
  check_width(o, p);
  if (p.phase() != 0) throw Error("conjugation generator must be a phase-0 Pauli string");
  if (pauli_commutes(o, p)) return PauliSum(o);
  Angle two = theta.scaled(2);
  PauliSum out(o.width());
  out.add(o, two.cos());
  out.add(o * p, Coeff::i() * two.sin());
  return out;
}

PauliSum clifford_gate(Gate kind, const std::vector<std::size_t>& qubits, std::size_t n) {
  auto need = [&](std::size_t k) {
    if (qubits.size() != k) throw Error("gate expects " + std::to_string(k) + " qubit indices");
    for (auto q : qubits)
      if (q >= n) throw Error("qubit index " + std::to_string(q) + " out of range");
  };
  auto P = [&](std::size_t q, char c) { return PauliString::single(n, q, c); };
  const Rational quarter(1, 4);
  switch (kind) {
    case Gate::S: {
      need(1);
      return pauli_exp(Angle::pi(-quarter), P(qubits[0], 'Z')) * Angle::pi(quarter).expi();
    }
    case Gate::H: {
      need(1);
      auto z = pauli_exp(Angle::pi(quarter), P(qubits[0], 'Z'));
      auto x = pauli_exp(Angle::pi(quarter), P(qubits[0], 'X'));
      return (z * x * z) * Angle::pi(Rational(3, 2)).expi();
    }
    case Gate::CNOT: {
      need(2);
      if (qubits[0] == qubits[1]) throw Error("CNOT control and target must differ");
      auto zi = pauli_exp(Angle::pi(-quarter), P(qubits[0], 'Z'));
      auto xj = pauli_exp(Angle::pi(-quarter), P(qubits[1], 'X'));
      auto zx = pauli_exp(Angle::pi(quarter), P(qubits[0], 'Z') * P(qubits[1], 'X'));
      return (zi * xj * zx) * Angle::pi(quarter).expi();
    }
  }
  throw Error("unknown gate");
}

}  // namespace fc
