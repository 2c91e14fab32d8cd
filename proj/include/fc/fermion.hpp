#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fc/bitvec.hpp"
#include "fc/operator_sum.hpp"

namespace fc {

// Single-mode elementary operators of the fermionic monoid.
enum class FOp : unsigned char { Ann, Cre, Num, Hole };

inline bool is_odd(FOp f) {
  return f == FOp::Ann || f == FOp::Cre;
}

struct FFactor {
  std::size_t mode;
  FOp op;
  friend bool operator==(const FFactor&, const FFactor&) = default;
};

// Product of single-mode factors over one mode, left to right; nullopt means zero.
std::optional<FOp> fop_mul(FOp a, FOp b);

// i^phase * a+_{c1}..a+_{ck} a_{dl}..a_{d1} h.. n.. with every index list
// ascending, or the absorbing zero element. The four mode sets are disjoint.
class FermionicString {
 public:
  FermionicString() = default;
  explicit FermionicString(std::size_t modes) : cre_(modes), ann_(modes), hole_(modes), num_(modes) {}

  static FermionicString identity(std::size_t modes) { return FermionicString(modes); }
  static FermionicString zero(std::size_t modes);
  static FermionicString single(std::size_t modes, std::size_t mode, FOp op);
  // Reorders an arbitrary product into canonical form, applying anticommutation
  // signs and the single-mode multiplication table.
  static FermionicString normalize(std::size_t modes, const std::vector<FFactor>& raw, int phase = 0);

  std::size_t width() const { return cre_.size(); }
  int phase() const { return phase_; }
  bool is_zero() const { return zero_; }
  bool is_identity() const { return !zero_ && cre_.none() && ann_.none() && hole_.none() && num_.none(); }

  const BitVec& creations() const { return cre_; }
  const BitVec& annihilations() const { return ann_; }
  const BitVec& holes() const { return hole_; }
  const BitVec& numbers() const { return num_; }
  std::optional<FOp> op_at(std::size_t mode) const;

  // Number of elementary operators, counting n and h as two each.
  std::size_t length() const;
  // Twice the many-body rank, i.e. length().
  std::size_t rank2() const { return length(); }

  // Factors in canonical product order.
  std::vector<FFactor> factors() const;

  FermionicString bare() const { return with_phase(0); }
  FermionicString with_phase(int p) const;
  FermionicString dagger() const;

  // Compact form "a0^ a1 h2 n3" in canonical product order; identity "I", zero "0".
  std::string label() const;

  friend bool operator==(const FermionicString&, const FermionicString&) = default;
  friend auto operator<=>(const FermionicString& a, const FermionicString& b) {
    if (auto c = a.zero_ <=> b.zero_; c != 0) return c;
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = b.cre_ <=> a.cre_; c != 0) return c;
    if (auto c = b.ann_ <=> a.ann_; c != 0) return c;
    if (auto c = b.hole_ <=> a.hole_; c != 0) return c;
    if (auto c = b.num_ <=> a.num_; c != 0) return c;
    return a.phase_ <=> b.phase_;
  }

  friend FermionicString operator*(const FermionicString& a, const FermionicString& b);

 private:
  BitVec cre_, ann_, hole_, num_;
  int phase_ = 0;
  bool zero_ = false;
};

using FermionicSum = OperatorSum<FermionicString>;

FermionicString ferm_normalize(std::size_t modes, const std::vector<FFactor>& raw, int phase = 0);
FermionicString ferm_mul(const FermionicString& a, const FermionicString& b);
FermionicString ferm_dagger(const FermionicString& a);
FermionicSum ferm_commutator(const FermionicSum& a, const FermionicSum& b);

// Rewrites every h_p as I - n_p. The result is the unique expansion over
// strings without holes, so two sums are equal operators iff their
// expansions are structurally equal.
FermionicSum expand_holes(const FermionicSum& s);
FermionicSum expand_holes(const FermionicString& s);

// Folds c X n_p + c X h_p into c X until no such pair remains. The operator is
// unchanged; only the written form gets shorter.
FermionicSum merge_complements(const FermionicSum& s);

}  // namespace fc
