#include "fc/clifford.hpp"

#include <cmath>
#include <optional>

#include "fc/error.hpp"

namespace fc {

Generator Generator::pair(std::size_t p, std::size_t q, GenSign s) {
  if (p >= q) throw Error("pair generator needs p < q");
  return {GenKind::PairCreate, s, p, q, {}};
}

Generator Generator::excitation(std::size_t p, std::size_t q, GenSign s) {
  if (p >= q) throw Error("excitation generator needs p < q");
  return {GenKind::SingleExc, s, p, q, {}};
}

void Generator::validate(std::size_t modes) const {
  switch (kind) {
    case GenKind::PairCreate:
    case GenKind::SingleExc:
      if (p >= q) throw Error("generator needs p < q");
      if (q >= modes) throw Error("generator index out of range");
      break;
    case GenKind::HalfBody:
    case GenKind::Number:
      if (p >= modes) throw Error("generator index out of range");
      break;
    case GenKind::Raw:
      if (raw.width() != modes) throw WidthMismatch(raw.width(), modes);
      if (raw.is_zero()) throw Error("raw generator built from the zero string");
      break;
  }
}

FermionicString Generator::base(std::size_t modes) const {
  validate(modes);
  switch (kind) {
    case GenKind::HalfBody: return FermionicString::single(modes, p, FOp::Cre);
    case GenKind::PairCreate: return FermionicString::normalize(modes, {{p, FOp::Cre}, {q, FOp::Cre}});
    case GenKind::SingleExc: return FermionicString::normalize(modes, {{p, FOp::Cre}, {q, FOp::Ann}});
    case GenKind::Number: return FermionicString::single(modes, p, FOp::Num);
    case GenKind::Raw: return raw;
  }
  throw Error("unknown generator kind");
}

FermionicSum Generator::op(std::size_t modes) const {
  FermionicString f = base(modes);
  if (kind == GenKind::Number) return FermionicSum(f);
  FermionicSum out(f);
  out.add(f.dagger(), hermitian() ? Coeff::one() : Coeff(-1));
  return out;
}

std::string Generator::str() const {
  std::string s = hermitian() ? "+" : "-";
  switch (kind) {
    case GenKind::HalfBody: return "halfbody" + s + "(" + std::to_string(p) + ")";
    case GenKind::PairCreate: return "pair" + s + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case GenKind::SingleExc: return "exc" + s + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case GenKind::Number: return "num(" + std::to_string(p) + ")";
    case GenKind::Raw: return "raw" + s + "(" + raw.label() + ")";
  }
  return "?";
}

namespace {

bool vanishes(const FermionicSum& s) {
  return expand_holes(s).empty();
}

struct Classified {
  AlphaClass alpha;
  FermionicSum first;   // [O,G]
  FermionicSum second;  // [[O,G],G]
};

// The closed form needs ad_G^3 O = -alpha [O,G] (anti-Hermitian G) or
// +alpha [O,G] (Hermitian G) with alpha in {1, 4}.
Classified classify(const FermionicSum& o, const FermionicSum& g, bool hermitian) {
  FermionicSum c1 = commutator(o, g);
  if (vanishes(c1)) return {AlphaClass::One, c1, FermionicSum(o.width())};
  FermionicSum c2 = commutator(c1, g);
  FermionicSum c3 = commutator(c2, g);
  Coeff s = hermitian ? Coeff::one() : Coeff(-1);
  if (vanishes(c3 - c1 * s)) return {AlphaClass::One, c1, c2};
  if (vanishes(c3 - c1 * (s * Coeff(4)))) return {AlphaClass::Four, c1, c2};
  throw ConsistencyError("third nested commutator is not a multiple 1 or 4 of the first");
}

Coeff sign_pow(long e) {
  return (e % 2 == 0) ? Coeff::one() : Coeff(-1);
}

CliffordImage fold(const Coeff& c, const FermionicString& s) {
  if (s.is_zero()) return {Coeff::zero(), s};
  return {c * Coeff::i_pow(s.phase()), s.bare()};
}

// Table row for a generator sharing exactly one index (c) with O.
// d is the partner index of a pair generator; flip_k inverts k-dependent signs.
CliffordImage one_common(const FermionicString& o, GenKind kind, bool herm, std::size_t c, std::size_t d, long k,
                         bool flip_k) {
  const std::size_t M = o.width();
  const long L = static_cast<long>(o.length());
  const FOp op = *o.op_at(c);
  long i = 0;
  if (op == FOp::Cre) i = 1 + static_cast<long>(o.creations().count_below(c));
  if (op == FOp::Ann) i = 1 + static_cast<long>(o.annihilations().count_below(c));

  long e = 0;
  bool imag = false;
  bool kdep = false;
  FFactor next{c, op};
  switch (kind) {
    case GenKind::HalfBody:
      switch (op) {
        case FOp::Num: e = L; next = {c, FOp::Hole}; break;
        case FOp::Hole: e = L; next = {c, FOp::Num}; break;
        case FOp::Cre: e = herm ? i + 1 : i; next = {c, FOp::Ann}; break;
        case FOp::Ann: e = herm ? L + i : L + i + 1; next = {c, FOp::Cre}; break;
      }
      break;
    case GenKind::PairCreate:
      switch (op) {
        case FOp::Num: next = {d, FOp::Hole}; break;
        case FOp::Hole: next = {d, FOp::Num}; break;
        case FOp::Cre: e = herm ? L + i + k + 1 : L + i + k; next = {d, FOp::Ann}; imag = herm; kdep = true; break;
        case FOp::Ann: e = k + i + 1; next = {d, FOp::Cre}; imag = herm; kdep = true; break;
      }
      break;
    case GenKind::SingleExc:
      switch (op) {
        case FOp::Num: next = {d, FOp::Num}; break;
        case FOp::Hole: next = {d, FOp::Hole}; break;
        case FOp::Cre: e = herm ? L + i + k + 1 : L + i + k; next = {d, FOp::Cre}; imag = herm; kdep = true; break;
        case FOp::Ann: e = k + i + 1; next = {d, FOp::Ann}; imag = herm; kdep = true; break;
      }
      break;
    default:
      throw Error("not a table generator");
  }
  // The Hermitian excitation is symmetric in its two indices, so it needs no flip.
  if (kdep && flip_k && !(kind == GenKind::SingleExc && herm)) ++e;

  std::vector<FFactor> seq;
  for (const auto& f : o.factors())
    if (f.mode != c) seq.push_back(f);
  seq.push_back(next);
  Coeff coeff = sign_pow(e);
  if (imag) coeff = coeff * Coeff::i();
  return fold(coeff, FermionicString::normalize(M, seq, o.phase()));
}

CliffordImage pair_apply(const FermionicString& o, const Generator& g, long k) {
  const bool herm = g.hermitian();
  const bool has_p = o.op_at(g.p).has_value();
  const bool has_q = o.op_at(g.q).has_value();
  if (!has_p && !has_q) return fold(Coeff::one(), o);
  if (has_p && !has_q) return one_common(o, g.kind, herm, g.p, g.q, k, false);
  if (!has_p && has_q) return one_common(o, g.kind, herm, g.q, g.p, k, true);

  // Both indices present: O = sigma * F1 * R with F1 the factor on p; transform each piece.
  const std::size_t M = o.width();
  FermionicString f1 = FermionicString::single(M, g.p, *o.op_at(g.p));
  std::vector<FFactor> rest;
  for (const auto& f : o.factors())
    if (f.mode != g.p) rest.push_back(f);
  FermionicString r = FermionicString::normalize(M, rest, o.phase());
  FermionicString prod = f1 * r;
  if (prod.bare() != o.bare()) throw ConsistencyError("factorization of a fermionic string failed");
  Coeff sigma = Coeff::i_pow(o.phase() - prod.phase());
  CliffordImage a = one_common(f1, g.kind, herm, g.p, g.q, k, false);
  CliffordImage b = one_common(r, g.kind, herm, g.q, g.p, k, true);
  return fold(sigma * a.coeff * b.coeff, a.string * b.string);
}

Angle odd_half_pi(long k) {
  return Angle::pi(Rational(2 * k + 1, 2));
}

}  // namespace

AlphaClass classify_alpha(const FermionicString& o, const Generator& g) {
  return classify(FermionicSum(o), g.op(o.width()), g.hermitian()).alpha;
}

FermionicSum general_conjugate(const FermionicString& o, const Generator& g, const Angle& theta) {
  const std::size_t M = o.width();
  if (o.is_zero()) return FermionicSum(M);
  FermionicSum O(o);
  if (theta.is_zero()) return O;
  FermionicSum G = g.op(M);
  auto [alpha, c1, c2] = classify(O, G, g.hermitian());
  if (vanishes(c1)) return O;

  Coeff k1, k2;
  if (alpha == AlphaClass::Four) {
    Angle two = theta.scaled(2);
    k1 = two.sin() * Coeff(Rational(1, 2));
    k2 = g.hermitian() ? (two.cos() - Coeff::one()) * Coeff(Rational(1, 4))
                       : (Coeff::one() - two.cos()) * Coeff(Rational(1, 4));
  } else {
    k1 = theta.sin();
    k2 = g.hermitian() ? theta.cos() - Coeff::one() : Coeff::one() - theta.cos();
  }
  if (g.hermitian()) k1 = k1 * Coeff::i();
  return merge_complements(O + c1 * k1 + c2 * k2);
}

FermionicSum general_conjugate(const FermionicSum& o, const Generator& g, const Angle& theta) {
  FermionicSum out(o.width());
  for (const auto& [s, c] : o) out += general_conjugate(s, g, theta) * c;
  return out;
}

CliffordImage clifford_apply(const FermionicString& o, const Generator& g, long k) {
  const std::size_t M = o.width();
  g.validate(M);
  if (o.is_zero()) return {Coeff::zero(), o};
  switch (g.kind) {
    case GenKind::HalfBody:
      if (!o.op_at(g.p)) return fold(sign_pow(static_cast<long>(o.length())), o);
      return one_common(o, g.kind, g.hermitian(), g.p, g.p, k, false);
    case GenKind::PairCreate:
    case GenKind::SingleExc:
      return pair_apply(o, g, k);
    case GenKind::Number:
      return number_phase_conjugate(o, g.p, odd_half_pi(k));
    case GenKind::Raw: {
      FermionicSum r = expand_holes(general_conjugate(o, g, odd_half_pi(k)));
      if (r.size() != 1) throw Error("raw generator is not Clifford for this string");
      return {r.begin()->second, r.begin()->first};
    }
  }
  throw Error("unknown generator kind");
}

CliffordImage number_phase_conjugate(const FermionicString& o, std::size_t p, const Angle& theta) {
  if (p >= o.width()) throw Error("mode index out of range");
  if (o.is_zero()) return {Coeff::zero(), o};
  Coeff c = Coeff::one();
  auto op = o.op_at(p);
  if (op == FOp::Ann) c = theta.expi();
  if (op == FOp::Cre) c = (-theta).expi();
  return fold(c, o);
}

namespace {

FermionicSum halfbody_op(std::size_t modes, std::size_t p, GenSign sign) {
  FermionicSum a(modes);
  a.add(FermionicString::single(modes, p, FOp::Cre), Coeff::one());
  a.add(FermionicString::single(modes, p, FOp::Ann), sign == GenSign::Anti ? Coeff(-1) : Coeff::one());
  return a;
}

// Nonzero entries; exact when a single exact angle remains.
struct ThetaInfo {
  std::vector<std::pair<std::size_t, Angle>> nz;
  bool single_exact = false;
  double c = 0.0;
};

ThetaInfo inspect(const ThetaVector& thetas) {
  ThetaInfo info;
  for (const auto& [p, t] : thetas)
    if (!t.is_zero()) {
      info.nz.emplace_back(p, t);
      info.c += t.to_radians() * t.to_radians();
    }
  info.single_exact = info.nz.size() == 1 && info.nz[0].second.is_exact();
  return info;
}

}  // namespace

FermionicSum sum_halfbody_exp(const ThetaVector& thetas, GenSign sign, std::size_t modes) {
  for (const auto& [p, t] : thetas)
    if (p >= modes) throw Error("mode index out of range");
  ThetaInfo info = inspect(thetas);
  FermionicSum out = FermionicSum::identity(modes);
  if (info.nz.empty()) return out;
  const Coeff unit = sign == GenSign::Anti ? Coeff::one() : Coeff::i();
  if (info.single_exact) {
    const auto& [p, t] = info.nz[0];
    return FermionicSum::identity(modes) * t.cos() + halfbody_op(modes, p, sign) * (unit * t.sin());
  }
  const double s = std::sqrt(info.c);
  out = out * Coeff::real(std::cos(s));
  for (const auto& [p, t] : info.nz)
    out += halfbody_op(modes, p, sign) * (unit * Coeff::real(std::sin(s) / s * t.to_radians()));
  return out;
}

FermionicSum sum_halfbody_conjugate(const FermionicString& o, const ThetaVector& thetas, GenSign sign) {
  const std::size_t M = o.width();
  for (const auto& [p, t] : thetas)
    if (p >= M) throw Error("mode index out of range");
  FermionicSum O(o);
  ThetaInfo info = inspect(thetas);
  if (info.nz.empty() || o.is_zero()) return O;

  // Both signs conjugate by exp(sum theta_q A^q) with A^q anti-Hermitian.
  const Coeff unit = sign == GenSign::Anti ? Coeff::one() : Coeff::i();
  std::vector<FermionicSum> A;
  std::vector<FermionicSum> first;
  for (const auto& [p, t] : info.nz) {
    A.push_back(halfbody_op(M, p, sign) * unit);
    first.push_back(commutator(O, A.back()));
  }

  FermionicSum out = O;
  if (info.single_exact) {
    Angle two = info.nz[0].second.scaled(2);
    out += first[0] * (two.sin() * Coeff(Rational(1, 2)));
    out += commutator(first[0], A[0]) * ((Coeff::one() - two.cos()) * Coeff(Rational(1, 4)));
    return out;
  }
  const double s = std::sqrt(info.c);
  const double k1 = 0.5 * std::sin(2 * s) / s;
  const double k2 = 0.5 * std::sin(s) * std::sin(s) / info.c;
  for (std::size_t a = 0; a < A.size(); ++a) {
    const double ta = info.nz[a].second.to_radians();
    out += first[a] * Coeff::real(k1 * ta);
    for (std::size_t b = 0; b < A.size(); ++b) {
      const double tb = info.nz[b].second.to_radians();
      out += commutator(first[a], A[b]) * Coeff::real(k2 * ta * tb);
    }
  }
  return out;
}

}  // namespace fc
