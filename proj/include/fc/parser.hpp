#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "fc/angle.hpp"
#include "fc/clifford.hpp"
#include "fc/fermion.hpp"
#include "fc/majorana.hpp"
#include "fc/pauli.hpp"

namespace fc {

// Text grammar:
//   sum    := [("qubits"|"modes") ':' N] term (('+'|'-') term)*
//   term   := (scalar '*')* (factor+ | scalar)
//   scalar := integer | p/q | decimal | symbol | i | sqrt2 | '(' lin [',' lin] ')'
// Pauli factors X3, Y0, Z1; Majorana g1(0), g2(4), g3(1); fermion a0^, a0, n0,
// h0 or a+(0), a(0), n(0), h(0); I is the identity in every algebra. Decimal
// numbers make the coefficient a float, everything else stays exact.
// `width` = 0 uses the header or infers max index + 1.
PauliSum parse_pauli(const std::string& text, std::size_t width = 0);
MajoranaSum parse_majorana(const std::string& text, std::size_t width = 0);
FermionicSum parse_fermion(const std::string& text, std::size_t width = 0);

Coeff parse_coeff(const std::string& text);

// Canonical rendering; parse(format(x)) reproduces x. Fermionic terms list
// annihilators in ascending mode order with the sign folded into the coefficient.
std::string format(const PauliSum& s);
std::string format(const MajoranaSum& s);
std::string format(const FermionicSum& s);
std::string format(const FermionicString& s);
std::string format_coeff(const Coeff& c);

// "halfbody-(0)", "halfbody+(0)", "pair-(0,1)", "exc+(0,1)", "num(0)" with an
// optional "@angle" suffix.
std::pair<Generator, std::optional<Angle>> parse_generator(const std::string& text);

}  // namespace fc
