#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fc/pauli.hpp"

namespace fc {

struct SymmetryGroup {
  std::size_t n_qubits = 0;
  std::vector<PauliString> generators;
};

// Z2 symmetries: an independent set of mutually commuting phase-0 Pauli
// strings that commute with every term of h.
SymmetryGroup find_z2_symmetries(const PauliSum& h);

// For each generator, the highest qubit where it acts with Z and no other generator does.
std::vector<std::size_t> auto_targets(const SymmetryGroup& s);

struct TaperingPlan {
  std::size_t n_qubits = 0;
  std::vector<PauliString> generators;
  std::vector<std::size_t> targets;
  std::vector<PauliSum> cliffords;  // (X_q + tau) / sqrt2
  std::vector<int> sector;          // +1 / -1 per generator
};

TaperingPlan build_tapering_plan(const SymmetryGroup& s, const std::vector<std::size_t>& targets,
                                 std::vector<int> sector = {});

// U H U with U the product of the plan's Cliffords.
PauliSum conjugate_hamiltonian(const PauliSum& h, const TaperingPlan& plan);

// Replaces X on each target by its sector sign and removes the target qubits.
PauliSum taper_qubits(const PauliSum& h, const TaperingPlan& plan);
PauliSum taper_qubits(const PauliSum& h, const TaperingPlan& plan, const std::vector<int>& sector);

// Sector of an occupation-number basis state (mode 0 first), read from the
// X eigenvalues on the targets after applying U.
std::vector<int> sector_of_state(const std::vector<bool>& occupations, const TaperingPlan& plan);

// "+--" <-> {+1,-1,-1}
std::vector<int> parse_sector(const std::string& s);
std::string sector_label(const std::vector<int>& sector);
// All 2^g sectors in the order +++, -++, +-+, ... (first generator fastest).
std::vector<std::vector<int>> all_sectors(std::size_t g);

}  // namespace fc
