#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fc/fermion.hpp"
#include "fc/rational.hpp"

namespace fc::lie {

enum class Family { Singles, Pairs, SinglesPairs, SinglesPairsHalf };

Family parse_family(const std::string& s);
std::string family_name(Family f);

struct Element {
  std::string name;  // "A^0_1", "A^01", "A^0"
  FermionicSum op;   // hole-free canonical form
};

// A^p_q = a+_p a_q - a+_q a_p, A^pq = a+_p a+_q - a_q a_p, A^p = a+_p - a_p.
FermionicSum single(std::size_t p, std::size_t q, std::size_t modes);
FermionicSum pair(std::size_t p, std::size_t q, std::size_t modes);
FermionicSum half(std::size_t p, std::size_t modes);

// Singles (p<q lexicographic), then pairs, then half-body elements, as the family requires.
std::vector<Element> basis(Family f, std::size_t modes);
std::size_t expected_dimension(Family f, std::size_t modes);

// Real coordinates of x in the basis, or nullopt when x is outside the span.
std::optional<std::vector<Rational>> expand(const FermionicSum& x, const std::vector<Element>& basis);

struct Check {
  std::string name;
  bool ok;
};

struct ClosureReport {
  Family family;
  std::size_t modes = 0;
  std::size_t dimension = 0;
  bool closed = false;
  // f[a][b][c]: [e_a, e_b] = sum_c f[a][b][c] e_c (empty when not closed)
  std::vector<std::vector<std::vector<Rational>>> structure_constants;
  std::vector<Check> checks;
  bool all_ok() const;
};

ClosureReport verify_closure(Family f, std::size_t modes);

// Checks that the matrix images (so(M), so(M)+so(M), so(M)+so(M+1)) are
// linearly independent and reproduce every commutator.
bool verify_isomorphism(Family f, std::size_t modes);

}  // namespace fc::lie
