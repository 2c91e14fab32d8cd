#pragma once

#include "fc/clifford.hpp"
#include "fc/pauli.hpp"

namespace fc {

// Term-wise conjugation of a Hamiltonian; terms are processed in parallel and
// merged in key order, so the result does not depend on the thread count.
FermionicSum conjugate_terms(const FermionicSum& h, const Generator& g, const Angle& theta);
FermionicSum conjugate_terms_serial(const FermionicSum& h, const Generator& g, const Angle& theta);

// U H U^dagger term by term.
PauliSum conjugate_terms(const PauliSum& h, const PauliSum& u);
PauliSum conjugate_terms_serial(const PauliSum& h, const PauliSum& u);

}  // namespace fc
