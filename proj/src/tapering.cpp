#include "fc/tapering.hpp"

#include <algorithm>
#include <map>

#include "fc/batch.hpp"
#include "fc/error.hpp"
#include "fc/gf2.hpp"

namespace fc {

namespace {

// Symplectic form on (x|z) vectors of length 2n.
bool omega(const BitVec& a, const BitVec& b, std::size_t n) {
  bool s = false;
  for (std::size_t q = 0; q < n; ++q) s ^= (a.get(q) && b.get(n + q)) != (a.get(n + q) && b.get(q));
  return s;
}

// Keeps a maximal commuting subset of the span: central vectors plus the
// first vector of every hyperbolic pair.
std::vector<BitVec> isotropic_part(std::vector<BitVec> vs, std::size_t n) {
  std::vector<BitVec> keep;
  while (!vs.empty()) {
    BitVec v = vs.front();
    vs.erase(vs.begin());
    auto partner = std::find_if(vs.begin(), vs.end(), [&](const BitVec& w) { return omega(v, w, n); });
    if (partner == vs.end()) {
      keep.push_back(v);
      continue;
    }
    BitVec w = *partner;
    vs.erase(partner);
    for (auto& u : vs) {
      if (omega(u, w, n)) u ^= v;
      if (omega(u, v, n)) u ^= w;
    }
    vs.erase(std::remove_if(vs.begin(), vs.end(), [](const BitVec& u) { return u.none(); }), vs.end());
    keep.push_back(v);
  }
  return keep;
}

PauliString from_xz(const BitVec& v, std::size_t n) {
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, v.get(q));
    z.set(q, v.get(n + q));
  }
  return PauliString(x, z, 0);
}

struct ExactImage {
  std::uint64_t row;
  int phase;
};

ExactImage apply_exact(const PauliString& s, std::uint64_t col) {
  const std::size_t n = s.width();
  int phase = s.phase();
  std::uint64_t row = col;
  for (std::size_t q = 0; q < n; ++q) {
    char c = s.op(q);
    if (c == 'I') continue;
    std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    bool one = col & bit;
    if (c == 'X' || c == 'Y') row ^= bit;
    if (c == 'Y') phase += one ? 3 : 1;
    if (c == 'Z' && one) phase += 2;
  }
  return {row, phase};
}

using StateVec = std::map<std::uint64_t, Coeff>;

StateVec apply_sum(const PauliSum& u, const StateVec& psi) {
  StateVec out;
  for (const auto& [s, c] : u)
    for (const auto& [col, a] : psi) {
      auto img = apply_exact(s, col);
      out[img.row] += (c * a).times_i_pow(img.phase);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

SymmetryGroup find_z2_symmetries(const PauliSum& h) {
  const std::size_t n = h.width();
  if (h.empty() || n == 0) throw Error("symmetry search needs a nonempty Hamiltonian");
  // A string (x|z) commutes with term t iff z_t.x + x_t.z = 0, so the check rows are (z_t | x_t).
  std::vector<BitVec> rows;
  for (const auto& [t, c] : h) {
    BitVec r(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      r.set(q, t.z().get(q));
      r.set(n + q, t.x().get(q));
    }
    rows.push_back(std::move(r));
  }
  auto ker = isotropic_part(gf2::kernel(rows, 2 * n), n);

  // Canonical basis: reduce with column order z_{n-1}..z_0, x_{n-1}..x_0 so each
  // generator owns a distinct highest Z qubit where possible.
  auto to_cols = [&](const BitVec& v) {
    BitVec r(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      r.set(n - 1 - q, v.get(n + q));
      r.set(2 * n - 1 - q, v.get(q));
    }
    return r;
  };
  auto from_cols = [&](const BitVec& r) {
    BitVec v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      v.set(n + q, r.get(n - 1 - q));
      v.set(q, r.get(2 * n - 1 - q));
    }
    return v;
  };
  std::vector<BitVec> cols;
  for (const auto& v : ker) cols.push_back(to_cols(v));
  auto e = gf2::rref(cols, 2 * n);

  SymmetryGroup g;
  g.n_qubits = n;
  for (auto it = e.rows.rbegin(); it != e.rows.rend(); ++it) g.generators.push_back(from_xz(from_cols(*it), n));
  return g;
}

std::vector<std::size_t> auto_targets(const SymmetryGroup& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    bool found = false;
    for (std::size_t q = s.n_qubits; q-- > 0;) {
      if (s.generators[i].op(q) != 'Z') continue;
      bool shared = false;
      for (std::size_t j = 0; j < s.generators.size(); ++j)
        if (j != i && (s.generators[j].op(q) == 'Z' || s.generators[j].op(q) == 'Y')) shared = true;
      if (shared || std::find(out.begin(), out.end(), q) != out.end()) continue;
      out.push_back(q);
      found = true;
      break;
    }
    if (!found)
      throw Error("generator " + s.generators[i].label() + " has no exclusive Z qubit; pass targets explicitly");
  }
  return out;
}

TaperingPlan build_tapering_plan(const SymmetryGroup& s, const std::vector<std::size_t>& targets,
                                 std::vector<int> sector) {
  const std::size_t n = s.n_qubits;
  const std::size_t g = s.generators.size();
  if (targets.size() != g) throw Error("need exactly one target qubit per symmetry generator");
  if (sector.empty()) sector.assign(g, 1);
  if (sector.size() != g) throw Error("sector length differs from the number of generators");
  for (int v : sector)
    if (v != 1 && v != -1) throw Error("sector entries must be +1 or -1");

  TaperingPlan plan;
  plan.n_qubits = n;
  plan.generators = s.generators;
  plan.targets = targets;
  plan.sector = std::move(sector);
  const Coeff inv_sqrt2(SymbolicCoeff::sqrt2(Rational(1, 2)));
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t q = targets[i];
    if (q >= n) throw Error("target qubit out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (targets[j] == q) throw Error("target qubits must be distinct");
    const PauliString& tau = s.generators[i];
    if (tau.phase() != 0) throw Error("symmetry generators must have phase 0");
    if (tau.op(q) != 'Z')
      throw Error("generator " + tau.label() + " does not act with Z on qubit " + std::to_string(q) +
                  "; change basis or choose another target");
    for (std::size_t j = 0; j < g; ++j)
      if (j != i && !pauli_commutes(tau, PauliString::single(n, targets[j], 'X')))
        throw Error("generator " + tau.label() + " anticommutes with X on target " + std::to_string(targets[j]));
    PauliSum u(n);
    u.add(PauliString::single(n, q, 'X'), inv_sqrt2);
    u.add(tau, inv_sqrt2);
    if (!((u * u) == PauliSum::identity(n))) throw ConsistencyError("tapering Clifford is not an involution");
    plan.cliffords.push_back(std::move(u));
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (!(plan.cliffords[i] * plan.cliffords[j] == plan.cliffords[j] * plan.cliffords[i]))
        throw Error("tapering Cliffords do not commute");
  return plan;
}

PauliSum conjugate_hamiltonian(const PauliSum& h, const TaperingPlan& plan) {
  if (h.width() != plan.n_qubits) throw WidthMismatch(h.width(), plan.n_qubits);
  PauliSum out = h;
  for (const auto& u : plan.cliffords) out = conjugate_terms(out, u);
  return out;
}

PauliSum taper_qubits(const PauliSum& h, const TaperingPlan& plan) {
  return taper_qubits(h, plan, plan.sector);
}

PauliSum taper_qubits(const PauliSum& h, const TaperingPlan& plan, const std::vector<int>& sector) {
  const std::size_t n = plan.n_qubits;
  if (h.width() != n) throw WidthMismatch(h.width(), n);
  if (sector.size() != plan.targets.size()) throw Error("sector length differs from the number of targets");
  std::vector<bool> removed(n, false);
  for (auto q : plan.targets) removed[q] = true;
  const std::size_t m = n - plan.targets.size();
  PauliSum out(m);
  for (const auto& [s, c] : h) {
    int sign = 1;
    for (std::size_t i = 0; i < plan.targets.size(); ++i) {
      char op = s.op(plan.targets[i]);
      if (op == 'Y' || op == 'Z')
        throw Error("term " + s.label() + " acts with " + op + " on target qubit " + std::to_string(plan.targets[i]));
      if (op == 'X') sign *= sector[i];
    }
    std::vector<std::pair<std::size_t, char>> ops;
    std::size_t k = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (removed[q]) continue;
      ops.emplace_back(k++, s.op(q));
    }
    out.add(PauliString::from_ops(m, ops, s.phase()), c * Coeff(sign));
  }
  return out;
}

std::vector<int> sector_of_state(const std::vector<bool>& occupations, const TaperingPlan& plan) {
  const std::size_t n = plan.n_qubits;
  if (occupations.size() != n) throw WidthMismatch(occupations.size(), n);
  std::uint64_t idx = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (occupations[q]) idx |= std::uint64_t{1} << (n - 1 - q);
  StateVec psi{{idx, Coeff::one()}};
  for (const auto& u : plan.cliffords) psi = apply_sum(u, psi);

  std::vector<int> out;
  for (auto q : plan.targets) {
    StateVec xpsi = apply_sum(PauliSum(PauliString::single(n, q, 'X')), psi);
    StateVec neg;
    for (const auto& [k, v] : psi) neg[k] = -v;
    if (xpsi == psi)
      out.push_back(1);
    else if (xpsi == neg)
      out.push_back(-1);
    else
      throw ConsistencyError("transformed state is not an X eigenstate on qubit " + std::to_string(q));
  }
  return out;
}

std::vector<int> parse_sector(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else if (c != ',' && c != ' ' && c != '(' && c != ')')
      throw Error("sector must be written with '+' and '-', got '" + s + "'");
  }
  return out;
}

std::string sector_label(const std::vector<int>& sector) {
  std::string s;
  for (int v : sector) s += v > 0 ? '+' : '-';
  return s;
}

std::vector<std::vector<int>> all_sectors(std::size_t g) {
  std::vector<std::vector<int>> out;
  for (std::size_t minus = 0; minus <= g; ++minus) {
    // combinations of `minus` positions in lexicographic order
    std::vector<bool> pick(g, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(minus), true);
    do {
      std::vector<int> s(g);
      for (std::size_t i = 0; i < g; ++i) s[i] = pick[i] ? -1 : 1;
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace fc
