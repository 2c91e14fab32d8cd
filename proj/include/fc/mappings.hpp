#pragma once

#include <cstddef>

#include "fc/fermion.hpp"
#include "fc/majorana.hpp"
#include "fc/pauli.hpp"

namespace fc {

// Jordan-Wigner with Z tails on the lower modes; qubit q is mode q.
PauliSum jw_fermion_to_pauli(const FermionicString& f, std::size_t qubits);
PauliSum jw_fermion_to_pauli(const FermionicSum& f, std::size_t qubits);
PauliString jw_majorana_to_pauli(const MajoranaString& g, std::size_t qubits);
PauliSum jw_majorana_to_pauli(const MajoranaSum& g, std::size_t qubits);

// X_p -> (a+_p + a_p) prod_{q<p} (h_q - n_q), Y_p -> i(a+_p - a_p) prod (h_q - n_q), Z_p -> h_p - n_p.
FermionicSum inverse_jw(const PauliString& p, std::size_t modes);
FermionicSum inverse_jw(const PauliSum& p, std::size_t modes);

MajoranaSum fermion_to_majorana(const FermionicString& f);
MajoranaSum fermion_to_majorana(const FermionicSum& f);
FermionicSum majorana_to_fermion(const MajoranaString& g);
FermionicSum majorana_to_fermion(const MajoranaSum& g);

}  // namespace fc
