#include "fc/majorana.hpp"

#include "fc/error.hpp"

namespace fc {

namespace {

int mod4(int p) {
  return ((p % 4) + 4) % 4;
}

}  // namespace

MajoranaString::MajoranaString(BitVec occupied, int phase) : occ_(std::move(occupied)), phase_(mod4(phase)) {}

MajoranaString MajoranaString::gamma(std::size_t modes, std::size_t mode, int flavor) {
  if (mode >= modes) throw Error("Majorana mode " + std::to_string(mode) + " out of range");
  MajoranaString s(modes);
  switch (flavor) {
    case 1: s.occ_.set(2 * mode); return s;
    case 2: s.occ_.set(2 * mode + 1); return s;
    case 3:
      // i*g2*g1 = -i*g1*g2
      s.occ_.set(2 * mode);
      s.occ_.set(2 * mode + 1);
      s.phase_ = 3;
      return s;
    default: throw Error("Majorana flavor must be 1, 2 or 3");
  }
}

MajoranaString MajoranaString::dagger() const {
  std::size_t L = length();
  int reverse = static_cast<int>((L * (L - (L > 0 ? 1 : 0)) / 2) % 2);
  return MajoranaString(occ_, -phase_ + 2 * reverse);
}

std::string MajoranaString::label() const {
  std::string s;
  for (auto k : occ_.ones()) {
    if (!s.empty()) s += ' ';
    s += (k % 2 == 0 ? "g1(" : "g2(") + std::to_string(k / 2) + ")";
  }
  return s.empty() ? "I" : s;
}

MajoranaString operator*(const MajoranaString& a, const MajoranaString& b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
  // Each factor of b moves left past the factors of a with a larger index.
  std::size_t La = a.occ_.popcount();
  std::size_t swaps = 0;
  for (auto j : b.occ_.ones()) swaps += La - a.occ_.count_below(j + 1);
  return MajoranaString(a.occ_ ^ b.occ_, a.phase_ + b.phase_ + 2 * static_cast<int>(swaps % 2));
}

MajoranaString maj_normalize(std::size_t modes, const std::vector<MajoranaFactor>& raw, int phase) {
  MajoranaString out = MajoranaString::identity(modes).with_phase(phase);
  for (const auto& f : raw) out = out * MajoranaString::gamma(modes, f.mode, f.flavor);
  return out;
}

MajoranaString maj_mul(const MajoranaString& a, const MajoranaString& b) {
  return a * b;
}

bool maj_commutes(const MajoranaString& a, const MajoranaString& b) {
  return (a * b).phase() == (b * a).phase();
}

Hermiticity maj_hermiticity(const MajoranaString& g) {
  if (g.phase() != 0) throw Error("hermiticity is defined for phase-0 Majorana strings only");
  return g.length() % 4 <= 1 ? Hermiticity::HermitianInvolution : Hermiticity::AntiHermitianSkewInvolution;
}

MajoranaSum maj_conjugate(const MajoranaString& o, const MajoranaString& g, const Angle& theta) {
  if (o.width() != g.width()) throw WidthMismatch(o.width(), g.width());
  bool herm = maj_hermiticity(g) == Hermiticity::HermitianInvolution;
  if (maj_commutes(o, g)) return MajoranaSum(o);
  Angle two = theta.scaled(2);
  MajoranaSum out(o.width());
  out.add(o, two.cos());
  out.add(o * g, herm ? Coeff::i() * two.sin() : two.sin());
  return out;
}

MajoranaSum maj_exp(const Angle& theta, const MajoranaString& g) {
  bool herm = maj_hermiticity(g) == Hermiticity::HermitianInvolution;
  MajoranaSum out(g.width());
  out.add(MajoranaString::identity(g.width()), theta.cos());
  out.add(g, herm ? Coeff::i() * theta.sin() : theta.sin());
  return out;
}

MajoranaString maj_parity(std::size_t modes) {
  if (modes == 0) throw Error("parity operator needs at least one mode");
  std::vector<MajoranaFactor> raw;
  for (std::size_t k = 0; k < modes; ++k) {
    raw.push_back({k, 2});
    raw.push_back({k, 1});
  }
  return maj_normalize(modes, raw, static_cast<int>(modes % 4));
}

bool maj_is_parity_preserving(const MajoranaString& g) {
  return g.length() % 2 == 0;
}

}  // namespace fc
