#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "fc/angle.hpp"
#include "fc/clifford.hpp"
#include "fc/majorana.hpp"
#include "fc/pauli.hpp"

namespace fc {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
std::size_t pick(Rng& rng, std::size_t n);

PauliString random_pauli(Rng& rng, std::size_t n);
MajoranaString random_majorana(Rng& rng, std::size_t modes);
FermionicString random_fermion(Rng& rng, std::size_t modes);
// One of halfbody/pair/exc/num with a random sign on valid indices.
Generator random_generator(Rng& rng, std::size_t modes);
// Half the time an exact multiple of pi/4, otherwise radians in [-pi, pi).
Angle random_angle(Rng& rng);

// Per-case seed so a single failing case can be replayed.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

struct SuiteResult {
  std::size_t cases = 0;
  double max_deviation = 0.0;
  bool ok = true;
  std::uint64_t worst_seed = 0;
  std::string worst_case;
};

// Fermionic, Majorana and Pauli conjugations against dense U^dagger O U on
// random inputs with at most 4 modes.
SuiteResult oracle_suite(std::uint64_t seed, std::size_t cases, double tol);

}  // namespace fc
