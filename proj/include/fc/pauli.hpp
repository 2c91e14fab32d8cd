#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fc/angle.hpp"
#include "fc/bitvec.hpp"
#include "fc/operator_sum.hpp"

namespace fc {

// i^phase * (tensor product of I/X/Y/Z). Qubit q holds X for (x,z)=(1,0),
// Z for (0,1) and the textbook Y for (1,1), so phase 0 means Hermitian.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}
  PauliString(BitVec x, BitVec z, int phase = 0);

  static PauliString identity(std::size_t n) { return PauliString(n); }
  // Single-qubit factor: op in "IXYZ".
  static PauliString single(std::size_t n, std::size_t q, char op);
  // Product of single-qubit factors, e.g. {{0,'Z'},{1,'Z'}}.
  static PauliString from_ops(std::size_t n, const std::vector<std::pair<std::size_t, char>>& ops, int phase = 0);

  std::size_t width() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  int phase() const { return phase_; }
  char op(std::size_t q) const;
  std::size_t weight() const { return (x_ | z_).popcount(); }
  bool is_identity() const { return x_.none() && z_.none(); }
  bool is_zero() const { return false; }

  PauliString bare() const { return PauliString(x_, z_, 0); }
  PauliString with_phase(int p) const { return PauliString(x_, z_, p); }
  PauliString dagger() const { return PauliString(x_, z_, -phase_); }
  // Hermitian-normalized strings square to +I.
  bool is_hermitian() const { return phase_ % 2 == 0; }

  // "X0 Y3 Z5", identity renders "I"; phase ignored.
  std::string label() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    return a.phase_ <=> b.phase_;
  }

  friend PauliString operator*(const PauliString& a, const PauliString& b);

 private:
  BitVec x_, z_;
  int phase_ = 0;
};

using PauliSum = OperatorSum<PauliString>;

PauliString pauli_mul(const PauliString& a, const PauliString& b);
bool pauli_commutes(const PauliString& a, const PauliString& b);

// e^{i theta P} = cos(theta) I + i sin(theta) P for a phase-0 string P.
PauliSum pauli_exp(const Angle& theta, const PauliString& p);

// e^{-i theta P} O e^{i theta P}.
PauliSum pauli_conjugate(const PauliString& o, const PauliString& p, const Angle& theta);

enum class Gate { S, H, CNOT };
// Gate unitary assembled from its exponential factorization on an n-qubit register.
PauliSum clifford_gate(Gate kind, const std::vector<std::size_t>& qubits, std::size_t n);

}  // namespace fc
