#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fc/fermion.hpp"
#include "fc/pauli.hpp"
#include "fc/tapering.hpp"

namespace fc::h2 {

// Integral names of the minimal-basis H2 model.
const std::vector<std::string>& integral_names();

// Each integral as a Coeff: the bare symbol by default, or a number when bound.
std::map<std::string, Coeff> integrals(const std::optional<Bindings>& values = std::nullopt);

// Second-quantized Hamiltonian on four spin orbitals (sigma_g up/down, sigma_u up/down).
FermionicSum fermionic_hamiltonian(const std::map<std::string, Coeff>& ints);

// a+_p a+_q a_s a_r
FermionicString excitation(std::size_t p, std::size_t q, std::size_t r, std::size_t s);

struct SectorHamiltonian {
  std::vector<int> sector;
  PauliSum hamiltonian;
};

struct Report {
  FermionicSum fermionic;      // input Hamiltonian
  PauliSum pauli;              // its JW image
  SymmetryGroup symmetries;
  TaperingPlan plan;
  PauliSum transformed;        // U H U
  std::size_t fermionic_terms_before = 0;
  std::size_t fermionic_terms_after = 0;
  std::vector<SectorHamiltonian> sectors;
  // Reference sector (+,-,-): one qubit, and its one-mode fermionic form
  // 1/2 (H00 + H11) + 1/2 (H11 - H00)(I - 2n) + H10 (a+ + a).
  PauliSum tapered;
  FermionicSum tapered_fermionic;
  Coeff H00, H11, H10;
  // Numeric runs only.
  std::optional<Eigen::VectorXd> tapered_spectrum;
  std::optional<Eigen::VectorXd> block_spectrum;
};

// Runs the full tapering walkthrough. With `values` every integral is bound
// and spectra are compared; otherwise everything stays symbolic.
Report demo(const std::optional<Bindings>& values = std::nullopt);

}  // namespace fc::h2
