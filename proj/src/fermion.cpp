#include "fc/fermion.hpp"

#include <algorithm>
#include <set>

#include "fc/error.hpp"

namespace fc {

namespace {

int mod4(int p) {
  return ((p % 4) + 4) % 4;
}

}  // namespace

std::optional<FOp> fop_mul(FOp a, FOp b) {
  using enum FOp;
  switch (a) {
    case Ann:
      if (b == Cre) return Hole;
      if (b == Num) return Ann;
      return std::nullopt;
    case Cre:
      if (b == Ann) return Num;
      if (b == Hole) return Cre;
      return std::nullopt;
    case Num:
      if (b == Cre) return Cre;
      if (b == Num) return Num;
      return std::nullopt;
    case Hole:
      if (b == Ann) return Ann;
      if (b == Hole) return Hole;
      return std::nullopt;
  }
  return std::nullopt;
}

FermionicString FermionicString::zero(std::size_t modes) {
  FermionicString s(modes);
  s.zero_ = true;
  return s;
}

FermionicString FermionicString::single(std::size_t modes, std::size_t mode, FOp op) {
  return normalize(modes, {{mode, op}});
}

FermionicString FermionicString::normalize(std::size_t modes, const std::vector<FFactor>& raw, int phase) {
  for (const auto& f : raw)
    if (f.mode >= modes) throw Error("fermionic mode " + std::to_string(f.mode) + " out of range");

  // Stable sort by mode; exchanging two odd factors on distinct modes flips the sign.
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (raw[i].mode > raw[j].mode && is_odd(raw[i].op) && is_odd(raw[j].op)) ++swaps;
  std::vector<FFactor> seq = raw;
  std::stable_sort(seq.begin(), seq.end(), [](const FFactor& a, const FFactor& b) { return a.mode < b.mode; });

  FermionicString out(modes);
  std::vector<std::size_t> cre_modes, ann_modes;
  for (std::size_t i = 0; i < seq.size();) {
    FOp acc = seq[i].op;
    std::size_t j = i + 1;
    for (; j < seq.size() && seq[j].mode == seq[i].mode; ++j) {
      auto r = fop_mul(acc, seq[j].op);
      if (!r) return zero(modes);
      acc = *r;
    }
    std::size_t m = seq[i].mode;
    switch (acc) {
      case FOp::Cre: out.cre_.set(m); cre_modes.push_back(m); break;
      case FOp::Ann: out.ann_.set(m); ann_modes.push_back(m); break;
      case FOp::Hole: out.hole_.set(m); break;
      case FOp::Num: out.num_.set(m); break;
    }
    i = j;
  }

  // Odd factors now sit in ascending mode order; the canonical order puts all
  // creations first (ascending) and annihilations after them (descending).
  std::size_t l = ann_modes.size();
  swaps += l * (l - (l > 0 ? 1 : 0)) / 2;
  for (auto c : cre_modes)
    for (auto d : ann_modes)
      if (d < c) ++swaps;
  out.phase_ = mod4(phase + 2 * static_cast<int>(swaps % 2));
  return out;
}

std::optional<FOp> FermionicString::op_at(std::size_t mode) const {
  if (cre_.get(mode)) return FOp::Cre;
  if (ann_.get(mode)) return FOp::Ann;
  if (hole_.get(mode)) return FOp::Hole;
  if (num_.get(mode)) return FOp::Num;
  return std::nullopt;
}

std::size_t FermionicString::length() const {
  if (zero_) return 0;
  return cre_.popcount() + ann_.popcount() + 2 * (hole_.popcount() + num_.popcount());
}

std::vector<FFactor> FermionicString::factors() const {
  std::vector<FFactor> out;
  for (auto m : cre_.ones()) out.push_back({m, FOp::Cre});
  auto ann = ann_.ones();
  for (auto it = ann.rbegin(); it != ann.rend(); ++it) out.push_back({*it, FOp::Ann});
  for (auto m : hole_.ones()) out.push_back({m, FOp::Hole});
  for (auto m : num_.ones()) out.push_back({m, FOp::Num});
  return out;
}

FermionicString FermionicString::with_phase(int p) const {
  FermionicString s = *this;
  s.phase_ = zero_ ? 0 : mod4(p);
  return s;
}

FermionicString FermionicString::dagger() const {
  if (zero_) return *this;
  auto f = factors();
  std::reverse(f.begin(), f.end());
  for (auto& x : f) {
    if (x.op == FOp::Cre)
      x.op = FOp::Ann;
    else if (x.op == FOp::Ann)
      x.op = FOp::Cre;
  }
  return normalize(width(), f, -phase_);
}

std::string FermionicString::label() const {
  if (zero_) return "0";
  std::string s;
  for (const auto& f : factors()) {
    if (!s.empty()) s += ' ';
    switch (f.op) {
      case FOp::Cre: s += "a" + std::to_string(f.mode) + "^"; break;
      case FOp::Ann: s += "a" + std::to_string(f.mode); break;
      case FOp::Hole: s += "h" + std::to_string(f.mode); break;
      case FOp::Num: s += "n" + std::to_string(f.mode); break;
    }
  }
  return s.empty() ? "I" : s;
}

FermionicString operator*(const FermionicString& a, const FermionicString& b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
  if (a.zero_ || b.zero_) return FermionicString::zero(a.width());
  auto seq = a.factors();
  auto fb = b.factors();
  seq.insert(seq.end(), fb.begin(), fb.end());
  return FermionicString::normalize(a.width(), seq, a.phase_ + b.phase_);
}

FermionicString ferm_normalize(std::size_t modes, const std::vector<FFactor>& raw, int phase) {
  return FermionicString::normalize(modes, raw, phase);
}

FermionicString ferm_mul(const FermionicString& a, const FermionicString& b) {
  return a * b;
}

FermionicString ferm_dagger(const FermionicString& a) {
  return a.dagger();
}

FermionicSum ferm_commutator(const FermionicSum& a, const FermionicSum& b) {
  return commutator(a, b);
}

FermionicSum expand_holes(const FermionicString& s) {
  std::size_t M = s.width();
  if (s.is_zero()) return FermionicSum(M);
  // Strip the holes, then multiply by prod (I - n_h); holes commute with everything else.
  auto holes = s.holes().ones();
  std::vector<FFactor> rest;
  for (const auto& f : s.factors())
    if (f.op != FOp::Hole) rest.push_back(f);
  FermionicSum out(FermionicString::normalize(M, rest, s.phase()));
  for (auto h : holes) {
    FermionicSum factor(M);
    factor.add(FermionicString::identity(M), Coeff::one());
    factor.add(FermionicString::single(M, h, FOp::Num), Coeff(-1));
    out = out * factor;
  }
  return out;
}

FermionicSum expand_holes(const FermionicSum& s) {
  FermionicSum out(s.width());
  for (const auto& [str, c] : s) out += expand_holes(str) * c;
  return out;
}

FermionicSum merge_complements(const FermionicSum& s) {
  const std::size_t M = s.width();
  FermionicSum cur = s;
  bool changed = true;
  while (changed) {
    changed = false;
    FermionicSum next(M);
    std::set<FermionicString> used;
    for (const auto& [str, c] : cur) {
      if (used.count(str)) continue;
      for (auto p : str.numbers().ones()) {
        std::vector<FFactor> with_hole, without;
        for (const auto& f : str.factors()) {
          if (f.mode == p) {
            with_hole.push_back({p, FOp::Hole});
            continue;
          }
          with_hole.push_back(f);
          without.push_back(f);
        }
        FermionicString partner = FermionicString::normalize(M, with_hole, str.phase());
        if (used.count(partner.bare()) || !(cur.coefficient(partner) == c)) continue;
        used.insert(str);
        used.insert(partner.bare());
        next.add(FermionicString::normalize(M, without, str.phase()), c);
        changed = true;
        break;
      }
    }
    for (const auto& [str, c] : cur)
      if (!used.count(str)) next.add(str, c);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fc
