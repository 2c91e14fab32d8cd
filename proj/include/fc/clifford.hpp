#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "fc/angle.hpp"
#include "fc/fermion.hpp"

namespace fc {

enum class GenKind { HalfBody, PairCreate, SingleExc, Number, Raw };
enum class GenSign { Anti, Herm };

// Unitary generators. Anti forms give A = F - F^dagger (U = e^{theta A}),
// Herm forms give H = F + F^dagger (U = e^{i theta H}); Number uses H = n_p.
struct Generator {
  GenKind kind = GenKind::HalfBody;
  GenSign sign = GenSign::Anti;
  std::size_t p = 0;
  std::size_t q = 0;
  FermionicString raw;

  static Generator half_body(std::size_t p, GenSign s) { return {GenKind::HalfBody, s, p, 0, {}}; }
  static Generator pair(std::size_t p, std::size_t q, GenSign s);
  static Generator excitation(std::size_t p, std::size_t q, GenSign s);
  static Generator number(std::size_t p) { return {GenKind::Number, GenSign::Herm, p, 0, {}}; }
  static Generator from_string(const FermionicString& f, GenSign s) { return {GenKind::Raw, s, 0, 0, f}; }

  bool hermitian() const { return sign == GenSign::Herm; }
  // F with A = F - F^dagger or H = F + F^dagger.
  FermionicString base(std::size_t modes) const;
  // The generator as an operator: A (anti) or H (herm).
  FermionicSum op(std::size_t modes) const;
  void validate(std::size_t modes) const;

  // "halfbody-(0)", "pair+(0,1)", "exc-(0,1)", "num(0)", "raw-(a0^ a1)"
  std::string str() const;
};

enum class AlphaClass { One = 1, Four = 4 };

// Rate class of the rotation of O: [[[O,G],G],G] = -alpha [O,G] for anti-Hermitian G
// and +alpha [O,G] for Hermitian G.
AlphaClass classify_alpha(const FermionicString& o, const Generator& g);

// e^{-theta A} O e^{theta A} or e^{-i theta H} O e^{i theta H} through the nested-commutator closed form.
FermionicSum general_conjugate(const FermionicString& o, const Generator& g, const Angle& theta);
FermionicSum general_conjugate(const FermionicSum& o, const Generator& g, const Angle& theta);

struct CliffordImage {
  Coeff coeff;
  FermionicString string;  // phase 0
};

// Single-string image at theta = (2k+1)pi/2 read off the Clifford tables.
// The Number kind ignores k; use number_phase_conjugate for its angle.
CliffordImage clifford_apply(const FermionicString& o, const Generator& g, long k);

// e^{-i theta n_p} O e^{i theta n_p}
CliffordImage number_phase_conjugate(const FermionicString& o, std::size_t p, const Angle& theta);

using ThetaVector = std::map<std::size_t, Angle>;

// exp(sum_p theta_p A^p) with A^p = a+_p - a_p (anti) or exp(i sum_p theta_p (a+_p + a_p)) (herm).
FermionicSum sum_halfbody_exp(const ThetaVector& thetas, GenSign sign, std::size_t modes);
// U^dagger O U for the unitary of sum_halfbody_exp.
FermionicSum sum_halfbody_conjugate(const FermionicString& o, const ThetaVector& thetas, GenSign sign);

}  // namespace fc
