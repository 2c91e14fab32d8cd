#include "fc/h2.hpp"

#include <cmath>

#include "fc/dense.hpp"
#include "fc/error.hpp"
#include "fc/mappings.hpp"

namespace fc::h2 {

namespace {

constexpr std::size_t kModes = 4;

FermionicString num(std::size_t p) {
  return FermionicString::single(kModes, p, FOp::Num);
}

// Terms that survive once float round-off is discarded.
std::size_t term_count(const FermionicSum& s) {
  std::size_t n = 0;
  for (const auto& [str, c] : s) n += c.is_exact() || std::abs(c.value()) > 1e-12;
  return n;
}

}  // namespace

const std::vector<std::string>& integral_names() {
  static const std::vector<std::string> names{"h00", "h22", "v0101", "v2323", "v0202", "v0220", "v0123"};
  return names;
}

std::map<std::string, Coeff> integrals(const std::optional<Bindings>& values) {
  std::map<std::string, Coeff> out;
  for (const auto& name : integral_names()) {
    if (!values) {
      out[name] = Coeff::symbol(name);
      continue;
    }
    auto it = values->find(name);
    if (it == values->end()) throw UnboundSymbol(name);
    out[name] = Coeff::real(it->second);
  }
  return out;
}

FermionicString excitation(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return FermionicString::normalize(kModes, {{p, FOp::Cre}, {q, FOp::Cre}, {s, FOp::Ann}, {r, FOp::Ann}});
}

FermionicSum fermionic_hamiltonian(const std::map<std::string, Coeff>& ints) {
  auto get = [&](const std::string& k) {
    auto it = ints.find(k);
    if (it == ints.end()) throw UnboundSymbol(k);
    return it->second;
  };
  FermionicSum h(kModes);
  h.add(num(0), get("h00"));
  h.add(num(1), get("h00"));
  h.add(num(2), get("h22"));
  h.add(num(3), get("h22"));
  h.add(num(0) * num(1), get("v0101"));
  h.add(num(2) * num(3), get("v2323"));
  Coeff direct = get("v0202") - get("v0220");
  h.add(num(0) * num(2), direct);
  h.add(num(1) * num(3), direct);
  h.add(num(0) * num(3), get("v0202"));
  h.add(num(1) * num(2), get("v0202"));
  Coeff v = get("v0123");
  h.add(excitation(2, 3, 0, 1), v);
  h.add(excitation(0, 3, 1, 2), -v);
  h.add(excitation(1, 2, 0, 3), -v);
  h.add(excitation(0, 1, 2, 3), v);
  return h;
}

Report demo(const std::optional<Bindings>& values) {
  Report r;
  r.fermionic = fermionic_hamiltonian(integrals(values));
  r.pauli = jw_fermion_to_pauli(r.fermionic, kModes);
  r.symmetries = find_z2_symmetries(r.pauli);
  r.plan = build_tapering_plan(r.symmetries, auto_targets(r.symmetries));
  r.transformed = conjugate_hamiltonian(r.pauli, r.plan);
  r.fermionic_terms_before = term_count(expand_holes(inverse_jw(r.pauli, kModes)));
  r.fermionic_terms_after = term_count(expand_holes(inverse_jw(r.transformed, kModes)));
  for (const auto& s : all_sectors(r.plan.generators.size()))
    r.sectors.push_back({s, taper_qubits(r.transformed, r.plan, s)});

  const std::vector<int> reference{1, -1, -1};
  if (r.plan.generators.size() != reference.size()) throw ConsistencyError("expected three H2 symmetries");
  r.tapered = taper_qubits(r.transformed, r.plan, reference);
  r.tapered_fermionic = inverse_jw(r.tapered, 1);
  PauliString I(1), Z = PauliString::single(1, 0, 'Z'), X = PauliString::single(1, 0, 'X');
  Coeff c0 = r.tapered.coefficient(I), cz = r.tapered.coefficient(Z), cx = r.tapered.coefficient(X);
  r.H00 = c0 + cz;
  r.H11 = c0 - cz;
  r.H10 = cx;

  if (values) {
    dense::Matrix full = dense::to_matrix(r.fermionic, kModes);
    // span{|1100>, |0011>} with mode 0 the most significant bit
    const Eigen::Index a = 0b1100, b = 0b0011;
    dense::Matrix block(2, 2);
    block << full(a, a), full(a, b), full(b, a), full(b, b);
    r.block_spectrum = dense::spectrum(block);
    r.tapered_spectrum = dense::spectrum(dense::to_matrix(r.tapered, 1));
  }
  return r;
}

}  // namespace fc::h2
