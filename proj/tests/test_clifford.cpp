#include "catch_amalgamated.hpp"
#include "fc/batch.hpp"
#include "fc/clifford.hpp"
#include "fc/error.hpp"
#include "fc/parser.hpp"
#include "fc/verify.hpp"
#include "oracle.hpp"

using namespace fc;

namespace {

FermionicString fs(const std::string& text, std::size_t M) {
  FermionicSum s = parse_fermion(text, M);
  REQUIRE(s.size() == 1);
  REQUIRE(s.begin()->second == Coeff::one());
  return s.begin()->first;
}

FermionicSum image(const CliffordImage& c) {
  return FermionicSum(c.string, c.coeff);
}

oracle::Mat conj_oracle(const FermionicString& o, const Generator& g, double theta, std::size_t M) {
  return oracle::conjugate(oracle::matrix(o), oracle::matrix(g.op(M), M), theta, g.hermitian());
}

}  // namespace

TEST_CASE("rate classification", "[clifford]") {
  CHECK(classify_alpha(fs("n0", 1), Generator::half_body(0, GenSign::Anti)) == AlphaClass::Four);
  CHECK(classify_alpha(fs("a0^ a1", 3), Generator::pair(0, 2, GenSign::Anti)) == AlphaClass::One);
  CHECK(classify_alpha(fs("n1", 2), Generator::half_body(0, GenSign::Anti)) == AlphaClass::One);
  // Hermitian half-body on its own annihilator: the rotation still runs at rate 4.
  CHECK(classify_alpha(fs("a0", 1), Generator::half_body(0, GenSign::Herm)) == AlphaClass::Four);
}

TEST_CASE("closed-form conjugation at generic angles", "[clifford]") {
  const double t = 0.3;
  const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t), h = std::sin(2 * t) / 2;
  Angle theta = Angle::radians(t);

  FermionicSum half = general_conjugate(fs("n0", 1), Generator::half_body(0, GenSign::Anti), theta);
  FermionicSum half_expect(1);
  half_expect.add(fs("n0", 1), Coeff::real(c2));
  half_expect.add(fs("h0", 1), Coeff::real(s2));
  half_expect.add(fs("a0^", 1), Coeff::real(h));
  half_expect.add(fs("a0", 1), Coeff::real(h));
  CHECK(oracle::max_diff(oracle::matrix(half, 1), oracle::matrix(half_expect, 1)) < 1e-12);

  FermionicSum exc = general_conjugate(fs("n0", 2), Generator::excitation(0, 1, GenSign::Anti), theta);
  FermionicSum exc_expect(2);
  exc_expect.add(fs("n0", 2), Coeff::real(c2));
  exc_expect.add(fs("n1", 2), Coeff::real(s2));
  exc_expect.add(fs("a0^ a1", 2), Coeff::real(h));
  exc_expect.add(fs("a1^ a0", 2), Coeff::real(h));
  CHECK(oracle::max_diff(oracle::matrix(exc, 2), oracle::matrix(exc_expect, 2)) < 1e-12);

  CHECK(general_conjugate(fs("a0^ a1 n2", 3), Generator::pair(0, 1, GenSign::Herm), Angle()) ==
        FermionicSum(fs("a0^ a1 n2", 3)));
}

TEST_CASE("closed form agrees with the dense oracle", "[clifford]") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    std::size_t M = 1 + pick(rng, 4);
    FermionicString o = random_fermion(rng, M);
    Generator g = random_generator(rng, M);
    Angle theta = random_angle(rng);
    FermionicSum got = general_conjugate(o, g, theta);
    CHECK(oracle::max_diff(oracle::matrix(got, M), conj_oracle(o, g, theta.to_radians(), M)) < 1e-10);
  }
}

TEST_CASE("Clifford table examples", "[clifford]") {
  CHECK(image(clifford_apply(fs("a0^ a1", 2), Generator::half_body(0, GenSign::Anti), 0)) == parse_fermion("a0 a1", 2));
  for (long k = -2; k <= 2; ++k) {
    FermionicSum expect = parse_fermion("a2 a1", 3) * Coeff(k % 2 ? -1 : 1);
    CHECK(image(clifford_apply(fs("a0^ a1", 3), Generator::pair(0, 2, GenSign::Anti), k)) == expect);
  }
  CHECK(image(clifford_apply(fs("a0", 1), Generator::half_body(0, GenSign::Anti), 0)) == parse_fermion("-a0^", 1));
  CHECK(image(clifford_apply(fs("n0", 1), Generator::half_body(0, GenSign::Anti), 0)) == parse_fermion("h0", 1));
}

TEST_CASE("Clifford images match the closed form on random strings", "[clifford]") {
  Rng rng(43);
  for (int t = 0; t < 400; ++t) {
    std::size_t M = 2 + pick(rng, 3);
    FermionicString o = random_fermion(rng, M);
    Generator g = random_generator(rng, M);
    long k = static_cast<long>(pick(rng, 5)) - 2;
    CliffordImage c = clifford_apply(o, g, k);
    FermionicSum closed = general_conjugate(o, g, Angle::pi(Rational(2 * k + 1, 2)));
    CHECK(expand_holes(image(c)) == expand_holes(closed));
    CHECK(c.string.rank2() == o.rank2());
  }
}

TEST_CASE("number-operator phases", "[clifford]") {
  Angle theta = Angle::radians(0.8);
  CliffordImage a = number_phase_conjugate(fs("a0", 1), 0, theta);
  CHECK(std::abs(a.coeff.value() - std::polar(1.0, 0.8)) < 1e-15);
  CHECK(a.string == fs("a0", 1));
  CHECK(number_phase_conjugate(fs("n0", 1), 0, theta).coeff == Coeff::one());
  CliffordImage t = number_phase_conjugate(fs("a0^ a1", 2), 0, Angle::pi(Rational(1, 4)));
  CHECK(t.coeff == Coeff(SymbolicCoeff::sqrt2(Rational(1, 2)), SymbolicCoeff::sqrt2(Rational(-1, 2))));
  oracle::Mat n0 = oracle::matrix(fs("n0", 2));
  oracle::Mat u = oracle::expm(std::complex<double>(0, M_PI / 4) * n0);
  CHECK(oracle::max_diff(oracle::matrix(image(t), 2), u.adjoint() * oracle::matrix(fs("a0^ a1", 2)) * u) < 1e-12);
}

TEST_CASE("non-conserving Hamiltonian from a half-body rotation", "[clifford]") {
  FermionicSum h = parse_fermion("x * n0 + y * n1 + w * a0^ a1 + w * a1^ a0", 2);
  FermionicSum expect = parse_fermion("x * h0 + y * n1 + w * a0 a1 + w * a1^ a0^", 2);
  for (long k : {-3L, -1L, 1L, 3L}) {
    FermionicSum got = conjugate_terms(h, Generator::half_body(0, GenSign::Anti), Angle::pi(Rational(k, 2)));
    CHECK(expand_holes(got) == expand_holes(expect));
  }
}

TEST_CASE("sum of half-body generators", "[clifford]") {
  FermionicSum u = sum_halfbody_exp({{0, Angle::pi(Rational(1, 2))}}, GenSign::Anti, 1);
  CHECK(u == parse_fermion("a0^ - a0", 1));
  CHECK(sum_halfbody_exp({{0, Angle()}}, GenSign::Anti, 1) == FermionicSum::identity(1));

  FermionicSum single = sum_halfbody_exp({{0, Angle::radians(0.7)}, {1, Angle()}}, GenSign::Herm, 2);
  oracle::Mat h = oracle::matrix(parse_fermion("a0^ + a0", 2), 2);
  CHECK(oracle::max_diff(oracle::matrix(single, 2), oracle::expm(std::complex<double>(0, 0.7) * h)) < 1e-12);

  for (GenSign sign : {GenSign::Anti, GenSign::Herm}) {
    FermionicSum one = sum_halfbody_conjugate(fs("a1", 2), {{1, Angle::radians(0.45)}}, sign);
    FermionicSum ref = general_conjugate(fs("a1", 2), Generator::half_body(1, sign), Angle::radians(0.45));
    CHECK(oracle::max_diff(oracle::matrix(one, 2), oracle::matrix(ref, 2)) < 1e-12);
  }
}

TEST_CASE("sum of half-body conjugation against the oracle", "[clifford]") {
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    const std::size_t M = 3;
    ThetaVector th;
    for (std::size_t p = 0; p < M; ++p) th[p] = Angle::radians(uniform(rng, -2, 2));
    GenSign sign = pick(rng, 2) ? GenSign::Herm : GenSign::Anti;
    FermionicString o = random_fermion(rng, M);
    oracle::Mat u = oracle::matrix(sum_halfbody_exp(th, sign, M), M);
    oracle::Mat expect = u.adjoint() * oracle::matrix(o) * u;
    CHECK(oracle::max_diff(oracle::matrix(sum_halfbody_conjugate(o, th, sign), M), expect) < 1e-10);
  }
}

TEST_CASE("parallel batch equals serial batch", "[clifford]") {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    std::size_t M = 2 + pick(rng, 3);
    FermionicSum h(M);
    for (int k = 0; k < 40; ++k) h.add(random_fermion(rng, M), Coeff(Rational(static_cast<long>(pick(rng, 5)) + 1, 3)));
    Generator g = random_generator(rng, M);
    Angle theta = random_angle(rng);
    CHECK(conjugate_terms(h, g, theta) == conjugate_terms_serial(h, g, theta));
  }
}

TEST_CASE("generator validation", "[clifford]") {
  CHECK_THROWS_AS(Generator::pair(1, 0, GenSign::Anti), Error);
  CHECK_THROWS_AS(Generator::excitation(2, 2, GenSign::Herm), Error);
  CHECK_THROWS(clifford_apply(fs("n0", 2), Generator::half_body(5, GenSign::Anti), 0));
  CHECK_THROWS(number_phase_conjugate(fs("n0", 1), 3, Angle()));
}

TEST_CASE("raw generators use the closed form", "[clifford]") {
  Generator g = Generator::from_string(ferm_normalize(3, {{0, FOp::Cre}, {1, FOp::Ann}, {2, FOp::Ann}}), GenSign::Anti);
  FermionicString o = fs("a0^ n1", 3);
  FermionicSum got = general_conjugate(o, g, Angle::radians(0.6));
  CHECK(oracle::max_diff(oracle::matrix(got, 3), conj_oracle(o, g, 0.6, 3)) < 1e-10);
}
