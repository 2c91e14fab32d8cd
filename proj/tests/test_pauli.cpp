#include <random>

#include "catch_amalgamated.hpp"
#include "fc/error.hpp"
#include "fc/parser.hpp"
#include "fc/pauli.hpp"
#include "fc/verify.hpp"
#include "oracle.hpp"

using namespace fc;

namespace {

PauliString ps(const std::string& text, std::size_t n) {
  return parse_pauli(text, n).begin()->first;
}

oracle::Mat exp_i(const oracle::Mat& h, double theta) {
  return oracle::expm(std::complex<double>(0, theta) * h);
}

}  // namespace

TEST_CASE("Pauli products", "[pauli]") {
  CHECK(pauli_mul(ps("X0", 1), ps("Y0", 1)) == ps("Z0", 1).with_phase(1));
  CHECK(pauli_mul(PauliString::identity(1), ps("Y0", 1)) == ps("Y0", 1));
  PauliString prod = pauli_mul(ps("X0 X1", 2), ps("Z0 Z1", 2));
  CHECK(prod == ps("Y0 Y1", 2).with_phase(2));
  CHECK(oracle::max_diff(oracle::matrix(prod), oracle::matrix(ps("X0 X1", 2)) * oracle::matrix(ps("Z0 Z1", 2))) < 1e-12);
  CHECK_THROWS_AS(pauli_mul(ps("X0", 1), ps("X0", 2)), WidthMismatch);
}

TEST_CASE("Pauli commutation", "[pauli]") {
  CHECK(pauli_commutes(ps("Z0 Z1", 3), ps("Z0 Z2", 3)));
  CHECK_FALSE(pauli_commutes(ps("X0", 1), ps("Z0", 1)));
  CHECK(pauli_commutes(ps("Y0 Y1 X2 X3", 4), ps("Z0 Z1", 4)));
}

TEST_CASE("Pauli group laws on random strings", "[pauli]") {
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + pick(rng, 4);
    PauliString a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
    CHECK(pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c)));
    CHECK(pauli_mul(a.bare(), a.bare()).is_identity());
    CHECK(pauli_mul(a.bare(), a.bare()).phase() == 0);
    bool same = pauli_mul(a, b) == pauli_mul(b, a);
    CHECK(pauli_commutes(a, b) == same);
  }
}

TEST_CASE("Pauli exponential", "[pauli]") {
  CHECK(pauli_exp(Angle::pi(Rational(1, 4)), ps("Z0", 1)) == parse_pauli("1/2*sqrt2 * I + 1/2*sqrt2*i * Z0", 1));
  CHECK(pauli_exp(Angle(), ps("X0 X1", 2)) == PauliSum::identity(2));
  CHECK(pauli_exp(Angle::pi(Rational(1, 2)), ps("Y0", 1)) == parse_pauli("i * Y0", 1));
  auto g = ps("Y0", 1);
  CHECK(oracle::max_diff(oracle::matrix(pauli_exp(Angle::pi(Rational(1, 2)), g), 1), exp_i(oracle::matrix(g), M_PI / 2)) < 1e-12);
  CHECK_THROWS(pauli_exp(Angle::pi(Rational(1, 4)), ps("Z0", 1).with_phase(1)));
}

TEST_CASE("Pauli conjugation", "[pauli]") {
  CHECK(pauli_conjugate(ps("X0", 1), ps("Z0", 1), Angle::pi(Rational(1, 4))) == PauliSum(ps("Y0", 1)));
  CHECK(pauli_conjugate(ps("Z0", 2), ps("Z1", 2), Angle::radians(0.37)) == PauliSum(ps("Z0", 2)));
  PauliSum eighth = pauli_conjugate(ps("X0", 1), ps("Z0", 1), Angle::pi(Rational(1, 8)));
  oracle::Mat u = exp_i(oracle::matrix(ps("Z0", 1)), M_PI / 8);
  CHECK(oracle::max_diff(oracle::matrix(eighth, 1), u.adjoint() * oracle::matrix(ps("X0", 1)) * u) < 1e-10);
  CHECK(oracle::max_diff(oracle::matrix(eighth, 1), oracle::matrix(parse_pauli("0.7071067811865476 * X0 + 0.7071067811865476 * Y0", 1), 1)) < 1e-10);
}

TEST_CASE("Clifford angles collapse anticommuting conjugations to one term", "[pauli]") {
  Rng rng(9);
  int seen = 0;
  while (seen < 200) {
    std::size_t n = 1 + pick(rng, 4);
    PauliString o = random_pauli(rng, n).bare(), p = random_pauli(rng, n).bare();
    if (pauli_commutes(o, p)) continue;
    ++seen;
    long k = static_cast<long>(pick(rng, 9)) - 4;
    PauliSum r = pauli_conjugate(o, p, Angle::pi(Rational(k, 4)));
    if (k % 2 == 0) continue;
    REQUIRE(r.size() == 1);
    CHECK(std::abs(std::abs(r.begin()->second.value()) - 1.0) < 1e-14);
  }
}

TEST_CASE("gate factorizations", "[pauli]") {
  CHECK(clifford_gate(Gate::S, {0}, 1) == parse_pauli("(1/2,1/2) * I + (1/2,-1/2) * Z0", 1));
  oracle::Mat had(2, 2);
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  CHECK(oracle::max_diff(oracle::matrix(clifford_gate(Gate::H, {0}, 1), 1), had) < 1e-12);
  CHECK(clifford_gate(Gate::H, {0}, 1) == parse_pauli("1/2*sqrt2 * X0 + 1/2*sqrt2 * Z0", 1));
  PauliSum cx = clifford_gate(Gate::CNOT, {0, 1}, 2);
  CHECK(cx * cx == PauliSum::identity(2));
  oracle::Mat cnot = oracle::Mat::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  CHECK(oracle::max_diff(oracle::matrix(cx, 2), cnot) < 1e-12);
  CHECK_THROWS(clifford_gate(Gate::CNOT, {1, 1}, 2));
  CHECK_THROWS(clifford_gate(Gate::S, {3}, 2));
}
