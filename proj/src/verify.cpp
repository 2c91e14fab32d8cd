#include "fc/verify.hpp"

#include <numbers>

#include "fc/dense.hpp"

namespace fc {

double uniform(Rng& rng, double lo, double hi) {
  double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return lo + (hi - lo) * u;
}

std::size_t pick(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

PauliString random_pauli(Rng& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, char>> ops;
  for (std::size_t q = 0; q < n; ++q) {
    char c = "IXYZ"[pick(rng, 4)];
    if (c != 'I') ops.emplace_back(q, c);
  }
  return PauliString::from_ops(n, ops);
}

MajoranaString random_majorana(Rng& rng, std::size_t modes) {
  std::vector<MajoranaFactor> raw;
  for (std::size_t m = 0; m < modes; ++m) {
    std::size_t k = pick(rng, 4);
    if (k) raw.push_back({m, static_cast<int>(k)});
  }
  return maj_normalize(modes, raw).bare();
}

FermionicString random_fermion(Rng& rng, std::size_t modes) {
  static const FOp ops[] = {FOp::Ann, FOp::Cre, FOp::Num, FOp::Hole};
  std::vector<FFactor> raw;
  for (std::size_t m = 0; m < modes; ++m) {
    std::size_t k = pick(rng, 5);
    if (k) raw.push_back({m, ops[k - 1]});
  }
  return FermionicString::normalize(modes, raw).bare();
}

Generator random_generator(Rng& rng, std::size_t modes) {
  GenSign sign = pick(rng, 2) ? GenSign::Herm : GenSign::Anti;
  std::size_t kind = modes >= 2 ? pick(rng, 4) : (pick(rng, 2) ? 3 : 0);
  std::size_t p = pick(rng, modes);
  if (kind == 0) return Generator::half_body(p, sign);
  if (kind == 3) return Generator::number(p);
  std::size_t q = pick(rng, modes - 1);
  if (q >= p) ++q;
  if (p > q) std::swap(p, q);
  return kind == 1 ? Generator::pair(p, q, sign) : Generator::excitation(p, q, sign);
}

Angle random_angle(Rng& rng) {
  if (pick(rng, 2)) return Angle::pi(Rational(static_cast<std::int64_t>(pick(rng, 17)) - 8, 4));
  return Angle::radians(uniform(rng, -std::numbers::pi, std::numbers::pi));
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct CaseResult {
  double deviation;
  std::string text;
};

CaseResult run_case(std::uint64_t s) {
  Rng rng(s);
  std::size_t M = 1 + pick(rng, 4);
  Angle theta = random_angle(rng);
  double t = theta.to_radians();
  double dev = 0.0;
  std::string text;

  FermionicString fo = random_fermion(rng, M);
  Generator g = random_generator(rng, M);
  {
    auto out = general_conjugate(fo, g, theta);
    auto expect = dense::matrix_conjugate_oracle(dense::to_matrix(fo, M), dense::to_matrix(g.op(M), M), t, g.hermitian());
    double d = dense::max_abs_diff(dense::to_matrix(out, M), expect);
    if (d >= dev) {
      dev = d;
      text = "fermion " + fo.label() + " under " + g.str() + " at " + theta.str();
    }
  }
  MajoranaString mo = random_majorana(rng, M);
  MajoranaString mg = random_majorana(rng, M);
  {
    bool herm = maj_hermiticity(mg) == Hermiticity::HermitianInvolution;
    auto out = maj_conjugate(mo, mg, theta);
    auto expect = dense::matrix_conjugate_oracle(dense::to_matrix(mo, M), dense::to_matrix(mg, M), t, herm);
    double d = dense::max_abs_diff(dense::to_matrix(out, M), expect);
    if (d > dev) {
      dev = d;
      text = "majorana " + mo.label() + " under " + mg.label() + " at " + theta.str();
    }
  }
  PauliString po = random_pauli(rng, M);
  PauliString pg = random_pauli(rng, M);
  {
    auto out = pauli_conjugate(po, pg, theta);
    auto expect = dense::matrix_conjugate_oracle(dense::to_matrix(po, M), dense::to_matrix(pg, M), t, true);
    double d = dense::max_abs_diff(dense::to_matrix(out, M), expect);
    if (d > dev) {
      dev = d;
      text = "pauli " + po.label() + " under " + pg.label() + " at " + theta.str();
    }
  }
  return {dev, text};
}

}  // namespace

SuiteResult oracle_suite(std::uint64_t seed, std::size_t cases, double tol) {
  SuiteResult r;
  r.cases = cases;
  for (std::size_t i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    CaseResult c = run_case(s);
    if (c.deviation >= r.max_deviation) {
      r.max_deviation = c.deviation;
      r.worst_seed = s;
      r.worst_case = c.text;
    }
  }
  r.ok = r.max_deviation < tol;
  return r;
}

}  // namespace fc
