#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fc/angle.hpp"
#include "fc/bitvec.hpp"
#include "fc/operator_sum.hpp"

namespace fc {

// i^phase * product of Majorana operators in ascending linear index, where
// index 2j is gamma_1 of mode j and 2j+1 is gamma_2 of mode j.
class MajoranaString {
 public:
  MajoranaString() = default;
  explicit MajoranaString(std::size_t modes) : occ_(2 * modes) {}
  MajoranaString(BitVec occupied, int phase);

  static MajoranaString identity(std::size_t modes) { return MajoranaString(modes); }
  // Single gamma_flavor on mode; flavor 3 expands to i*gamma_2*gamma_1.
  static MajoranaString gamma(std::size_t modes, std::size_t mode, int flavor);

  std::size_t width() const { return occ_.size() / 2; }
  const BitVec& occupied() const { return occ_; }
  int phase() const { return phase_; }
  std::size_t length() const { return occ_.popcount(); }
  bool is_zero() const { return false; }
  bool is_identity() const { return occ_.none(); }

  MajoranaString bare() const { return MajoranaString(occ_, 0); }
  MajoranaString with_phase(int p) const { return MajoranaString(occ_, p); }
  MajoranaString dagger() const;

  // "g1(0) g2(3)", identity renders "I"; phase ignored.
  std::string label() const;

  friend bool operator==(const MajoranaString&, const MajoranaString&) = default;
  friend auto operator<=>(const MajoranaString& a, const MajoranaString& b) {
    if (auto c = a.occ_ <=> b.occ_; c != 0) return c;
    return a.phase_ <=> b.phase_;
  }

  friend MajoranaString operator*(const MajoranaString& a, const MajoranaString& b);

 private:
  BitVec occ_;
  int phase_ = 0;
};

using MajoranaSum = OperatorSum<MajoranaString>;

struct MajoranaFactor {
  std::size_t mode;
  int flavor;  // 1, 2 or 3
};

MajoranaString maj_normalize(std::size_t modes, const std::vector<MajoranaFactor>& raw, int phase = 0);
MajoranaString maj_mul(const MajoranaString& a, const MajoranaString& b);
bool maj_commutes(const MajoranaString& a, const MajoranaString& b);

enum class Hermiticity { HermitianInvolution, AntiHermitianSkewInvolution };
Hermiticity maj_hermiticity(const MajoranaString& g);

// e^{-i theta G} O e^{i theta G} for Hermitian G, e^{-theta G} O e^{theta G} otherwise.
MajoranaSum maj_conjugate(const MajoranaString& o, const MajoranaString& g, const Angle& theta);

// Unitary generated by g: e^{i theta G} (Hermitian) or e^{theta G} (anti-Hermitian).
MajoranaSum maj_exp(const Angle& theta, const MajoranaString& g);

// i^M prod_k gamma_2^(k) gamma_1^(k)
MajoranaString maj_parity(std::size_t modes);
bool maj_is_parity_preserving(const MajoranaString& g);

}  // namespace fc
