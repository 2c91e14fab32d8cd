#pragma once

#include <optional>

#include <json.hpp>

#include "fc/h2.hpp"
#include "fc/lie.hpp"
#include "fc/pauli.hpp"

namespace fc {

using Json = nlohmann::ordered_json;

// {"n_qubits": M, "terms": [{"pauli": "Z0 Z1", "coeff": {"re": "...", "im": "..."}}]}
// Exact parts are written in the coefficient grammar, floats as %.17g text.
Json hamiltonian_to_json(const PauliSum& h);
PauliSum hamiltonian_from_json(const Json& j);

Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);

Json report_to_json(const h2::Report& r);
// `isomorphism` is empty for families that are not algebras.
Json closure_to_json(const lie::ClosureReport& r, std::optional<bool> isomorphism, bool ok);

}  // namespace fc
