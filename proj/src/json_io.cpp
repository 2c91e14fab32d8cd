#include "fc/json_io.hpp"

#include "fc/error.hpp"
#include "fc/parser.hpp"
#include "fc/tapering.hpp"

namespace fc {

Json coeff_to_json(const Coeff& c) {
  Json j;
  if (c.is_exact()) {
    j["re"] = c.exact().re.str();
    j["im"] = c.exact().im.str();
  } else {
    j["re"] = float_text(c.value().real());
    j["im"] = float_text(c.value().imag());
  }
  return j;
}

Coeff coeff_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError("coefficient needs \"re\" and \"im\"", 0);
  auto part = [](const Json& v) -> Coeff {
    if (v.is_number()) return Coeff::real(v.get<double>());
    if (!v.is_string()) throw ParseError("coefficient part must be a string or number", 0);
    return parse_coeff(v.get<std::string>());
  };
  Coeff re = part(j["re"]);
  Coeff im = part(j["im"]);
  for (const Coeff* x : {&re, &im}) {
    bool complex = x->is_exact() ? !x->exact().im.is_zero() : x->value().imag() != 0.0;
    if (complex) throw ParseError("coefficient parts must be real", 0);
  }
  if (re.is_exact() && im.is_exact()) return Coeff(re.exact().re, im.exact().re);
  return Coeff(std::complex<double>(re.value().real(), im.value().real()));
}

Json hamiltonian_to_json(const PauliSum& h) {
  Json j;
  j["n_qubits"] = h.width();
  Json terms = Json::array();
  for (const auto& [p, c] : h) terms.push_back(Json{{"pauli", p.label()}, {"coeff", coeff_to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

PauliSum hamiltonian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("terms"))
    throw ParseError("Hamiltonian needs \"n_qubits\" and \"terms\"", 0);
  std::size_t n = j["n_qubits"].get<std::size_t>();
  PauliSum out(n);
  for (const auto& t : j["terms"]) {
    std::string label = t.at("pauli").get<std::string>();
    PauliSum one = parse_pauli(label.empty() ? "I" : label, n);
    if (one.size() != 1) throw ParseError("bad Pauli label '" + label + "'", 0);
    out.add(one.begin()->first, one.begin()->second * coeff_from_json(t.at("coeff")));
  }
  return out;
}

Json report_to_json(const h2::Report& r) {
  Json j;
  j["pauli_hamiltonian"] = hamiltonian_to_json(r.pauli);
  Json gens = Json::array();
  for (const auto& g : r.symmetries.generators) gens.push_back(g.label());
  j["symmetry_generators"] = gens;
  j["targets"] = r.plan.targets;
  j["transformed_hamiltonian"] = hamiltonian_to_json(r.transformed);
  j["fermionic_terms_before"] = r.fermionic_terms_before;
  j["fermionic_terms_after"] = r.fermionic_terms_after;
  Json sectors = Json::array();
  for (const auto& s : r.sectors)
    sectors.push_back(Json{{"sector", sector_label(s.sector)}, {"hamiltonian", hamiltonian_to_json(s.hamiltonian)}});
  j["sectors"] = sectors;
  j["reference_sector"] = Json{{"sector", "+--"},
                               {"hamiltonian", hamiltonian_to_json(r.tapered)},
                               {"fermionic", format(r.tapered_fermionic)},
                               {"H00", coeff_to_json(r.H00)},
                               {"H11", coeff_to_json(r.H11)},
                               {"H10", coeff_to_json(r.H10)}};
  if (r.tapered_spectrum && r.block_spectrum) {
    std::vector<double> a(r.tapered_spectrum->data(), r.tapered_spectrum->data() + r.tapered_spectrum->size());
    std::vector<double> b(r.block_spectrum->data(), r.block_spectrum->data() + r.block_spectrum->size());
    j["tapered_spectrum"] = a;
    j["block_spectrum"] = b;
  }
  return j;
}

Json closure_to_json(const lie::ClosureReport& r, std::optional<bool> isomorphism, bool ok) {
  Json j;
  j["family"] = lie::family_name(r.family);
  j["modes"] = r.modes;
  j["dimension"] = r.dimension;
  j["expected_dimension"] = lie::expected_dimension(r.family, r.modes);
  j["closed"] = r.closed;
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = c.ok;
  j["checks"] = checks;
  if (isomorphism)
    j["isomorphism"] = *isomorphism;
  else
    j["isomorphism"] = nullptr;
  j["ok"] = ok;
  return j;
}

}  // namespace fc
