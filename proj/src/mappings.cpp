#include "fc/mappings.hpp"

#include "fc/error.hpp"

namespace fc {

namespace {

const Rational kHalf(1, 2);

void check_fits(std::size_t have, std::size_t target) {
  if (have > target) throw WidthMismatch(have, target);
}

PauliString z_tail(std::size_t n, std::size_t p) {
  PauliString out(n);
  for (std::size_t q = 0; q < p; ++q) out = out * PauliString::single(n, q, 'Z');
  return out;
}

PauliSum jw_factor(std::size_t n, const FFactor& f) {
  PauliString I(n);
  PauliString Z = PauliString::single(n, f.mode, 'Z');
  PauliSum out(n);
  switch (f.op) {
    case FOp::Ann:
    case FOp::Cre: {
      PauliString tail = z_tail(n, f.mode);
      Coeff iy = f.op == FOp::Ann ? Coeff::i() : -Coeff::i();
      out.add(PauliString::single(n, f.mode, 'X') * tail, Coeff(kHalf));
      out.add(PauliString::single(n, f.mode, 'Y') * tail, iy * Coeff(kHalf));
      break;
    }
    case FOp::Num:
      out.add(I, Coeff(kHalf));
      out.add(Z, Coeff(-kHalf));
      break;
    case FOp::Hole:
      out.add(I, Coeff(kHalf));
      out.add(Z, Coeff(kHalf));
      break;
  }
  return out;
}

FermionicSum parity_tail(std::size_t modes, std::size_t p) {
  FermionicSum out = FermionicSum::identity(modes);
  for (std::size_t q = 0; q < p; ++q) {
    FermionicSum z(modes);
    z.add(FermionicString::single(modes, q, FOp::Hole), Coeff::one());
    z.add(FermionicString::single(modes, q, FOp::Num), Coeff(-1));
    out = out * z;
  }
  return out;
}

FermionicSum inverse_jw_qubit(std::size_t modes, std::size_t q, char op) {
  FermionicString cre = FermionicString::single(modes, q, FOp::Cre);
  FermionicString ann = FermionicString::single(modes, q, FOp::Ann);
  FermionicSum site(modes);
  switch (op) {
    case 'X':
      site.add(cre, Coeff::one());
      site.add(ann, Coeff::one());
      return site * parity_tail(modes, q);
    case 'Y':
      site.add(cre, Coeff::i());
      site.add(ann, -Coeff::i());
      return site * parity_tail(modes, q);
    case 'Z':
      site.add(FermionicString::single(modes, q, FOp::Hole), Coeff::one());
      site.add(FermionicString::single(modes, q, FOp::Num), Coeff(-1));
      return site;
    default:
      return FermionicSum::identity(modes);
  }
}

MajoranaSum maj_factor(std::size_t M, const FFactor& f) {
  MajoranaString g1 = MajoranaString::gamma(M, f.mode, 1);
  MajoranaString g2 = MajoranaString::gamma(M, f.mode, 2);
  MajoranaSum out(M);
  switch (f.op) {
    case FOp::Cre:
      out.add(g1, Coeff(kHalf));
      out.add(g2, -Coeff::i() * Coeff(kHalf));
      break;
    case FOp::Ann:
      out.add(g1, Coeff(kHalf));
      out.add(g2, Coeff::i() * Coeff(kHalf));
      break;
    case FOp::Num:
      out.add(MajoranaString::identity(M), Coeff(kHalf));
      out.add(g1 * g2, Coeff::i() * Coeff(kHalf));
      break;
    case FOp::Hole:
      out.add(MajoranaString::identity(M), Coeff(kHalf));
      out.add(g1 * g2, -Coeff::i() * Coeff(kHalf));
      break;
  }
  return out;
}

}  // namespace

PauliSum jw_fermion_to_pauli(const FermionicString& f, std::size_t qubits) {
  check_fits(f.width(), qubits);
  PauliSum out(qubits);
  if (f.is_zero()) return out;
  out = PauliSum::identity(qubits) * Coeff::i_pow(f.phase());
  for (const auto& fac : f.factors()) out = out * jw_factor(qubits, fac);
  return out;
}

PauliSum jw_fermion_to_pauli(const FermionicSum& f, std::size_t qubits) {
  PauliSum out(qubits);
  for (const auto& [s, c] : f) out += jw_fermion_to_pauli(s, qubits) * c;
  return out;
}

PauliString jw_majorana_to_pauli(const MajoranaString& g, std::size_t qubits) {
  check_fits(g.width(), qubits);
  PauliString out = PauliString::identity(qubits).with_phase(g.phase());
  for (auto k : g.occupied().ones()) {
    std::size_t mode = k / 2;
    out = out * (PauliString::single(qubits, mode, k % 2 == 0 ? 'X' : 'Y') * z_tail(qubits, mode));
  }
  return out;
}

PauliSum jw_majorana_to_pauli(const MajoranaSum& g, std::size_t qubits) {
  PauliSum out(qubits);
  for (const auto& [s, c] : g) out.add(jw_majorana_to_pauli(s, qubits), c);
  return out;
}

FermionicSum inverse_jw(const PauliString& p, std::size_t modes) {
  check_fits(p.width(), modes);
  FermionicSum out = FermionicSum::identity(modes) * Coeff::i_pow(p.phase());
  for (std::size_t q = 0; q < p.width(); ++q) {
    char c = p.op(q);
    if (c != 'I') out = out * inverse_jw_qubit(modes, q, c);
  }
  return out;
}

FermionicSum inverse_jw(const PauliSum& p, std::size_t modes) {
  FermionicSum out(modes);
  for (const auto& [s, c] : p) out += inverse_jw(s, modes) * c;
  return out;
}

MajoranaSum fermion_to_majorana(const FermionicString& f) {
  const std::size_t M = f.width();
  MajoranaSum out(M);
  if (f.is_zero()) return out;
  out = MajoranaSum::identity(M) * Coeff::i_pow(f.phase());
  for (const auto& fac : f.factors()) out = out * maj_factor(M, fac);
  return out;
}

MajoranaSum fermion_to_majorana(const FermionicSum& f) {
  MajoranaSum out(f.width());
  for (const auto& [s, c] : f) out += fermion_to_majorana(s) * c;
  return out;
}

FermionicSum majorana_to_fermion(const MajoranaString& g) {
  const std::size_t M = g.width();
  FermionicSum out = FermionicSum::identity(M) * Coeff::i_pow(g.phase());
  for (auto k : g.occupied().ones()) {
    std::size_t mode = k / 2;
    FermionicString cre = FermionicString::single(M, mode, FOp::Cre);
    FermionicString ann = FermionicString::single(M, mode, FOp::Ann);
    FermionicSum f(M);
    if (k % 2 == 0) {
      f.add(cre, Coeff::one());
      f.add(ann, Coeff::one());
    } else {
      f.add(cre, Coeff::i());
      f.add(ann, -Coeff::i());
    }
    out = out * f;
  }
  return out;
}

FermionicSum majorana_to_fermion(const MajoranaSum& g) {
  FermionicSum out(g.width());
  for (const auto& [s, c] : g) out += majorana_to_fermion(s) * c;
  return out;
}

}  // namespace fc
