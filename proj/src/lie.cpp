#include "fc/lie.hpp"

#include "fc/error.hpp"

namespace fc::lie {

namespace {

bool same(const FermionicSum& a, const FermionicSum& b) {
  return expand_holes(a - b).empty();
}

FermionicSum kd(std::size_t a, std::size_t b, const FermionicSum& x) {
  return a == b ? x : FermionicSum(x.width());
}

// Antisymmetric extensions: A^q_p = -A^p_q, A^pp = 0, A^p_p = 0.
FermionicSum single_any(std::size_t p, std::size_t q, std::size_t M) {
  if (p == q) return FermionicSum(M);
  return p < q ? single(p, q, M) : -single(q, p, M);
}

FermionicSum pair_any(std::size_t p, std::size_t q, std::size_t M) {
  if (p == q) return FermionicSum(M);
  return p < q ? pair(p, q, M) : -pair(q, p, M);
}

// Dense rational matrix.
struct RMat {
  std::size_t n = 0;
  std::vector<Rational> a;
  explicit RMat(std::size_t n_ = 0) : n(n_), a(n_ * n_) {}
  Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

RMat mul(const RMat& x, const RMat& y) {
  RMat out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.n; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

RMat bracket(const RMat& x, const RMat& y) {
  RMat p = mul(x, y), q = mul(y, x);
  for (std::size_t k = 0; k < p.a.size(); ++k) p.a[k] -= q.a[k];
  return p;
}

// Rank over Q of row vectors.
std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      Rational f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// L_pq = E_pq - E_qp placed at block offset `off`.
void add_L(RMat& m, std::size_t off, std::size_t p, std::size_t q, Rational s) {
  m.at(off + p, off + q) += s;
  m.at(off + q, off + p) -= s;
}

std::vector<RMat> images(Family f, std::size_t M) {
  std::vector<RMat> out;
  std::size_t dim = f == Family::Singles ? M : f == Family::SinglesPairsHalf ? 2 * M + 1 : 2 * M;
  bool two_blocks = f != Family::Singles;
  if (f == Family::Pairs) throw Error("pair elements alone do not form a Lie algebra");
  for (std::size_t p = 0; p < M; ++p)
    for (std::size_t q = p + 1; q < M; ++q) {
      RMat m(dim);
      add_L(m, 0, p, q, 1);
      if (two_blocks) add_L(m, M, p, q, 1);
      out.push_back(m);
    }
  if (f == Family::SinglesPairs || f == Family::SinglesPairsHalf)
    for (std::size_t p = 0; p < M; ++p)
      for (std::size_t q = p + 1; q < M; ++q) {
        RMat m(dim);
        add_L(m, 0, p, q, 1);
        add_L(m, M, p, q, -1);
        out.push_back(m);
      }
  if (f == Family::SinglesPairsHalf)
    for (std::size_t p = 0; p < M; ++p) {
      RMat m(dim);
      add_L(m, M, p, M, 2);
      out.push_back(m);
    }
  return out;
}

}  // namespace

Family parse_family(const std::string& s) {
  if (s == "singles") return Family::Singles;
  if (s == "pairs") return Family::Pairs;
  if (s == "singles_pairs") return Family::SinglesPairs;
  if (s == "singles_pairs_half") return Family::SinglesPairsHalf;
  throw Error("unknown family '" + s + "' (singles, pairs, singles_pairs, singles_pairs_half)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Singles: return "singles";
    case Family::Pairs: return "pairs";
    case Family::SinglesPairs: return "singles_pairs";
    case Family::SinglesPairsHalf: return "singles_pairs_half";
  }
  return "?";
}

FermionicSum single(std::size_t p, std::size_t q, std::size_t M) {
  FermionicSum out(M);
  out.add(FermionicString::normalize(M, {{p, FOp::Cre}, {q, FOp::Ann}}), Coeff::one());
  out.add(FermionicString::normalize(M, {{q, FOp::Cre}, {p, FOp::Ann}}), Coeff(-1));
  return out;
}

FermionicSum pair(std::size_t p, std::size_t q, std::size_t M) {
  FermionicSum out(M);
  out.add(FermionicString::normalize(M, {{p, FOp::Cre}, {q, FOp::Cre}}), Coeff::one());
  out.add(FermionicString::normalize(M, {{q, FOp::Ann}, {p, FOp::Ann}}), Coeff(-1));
  return out;
}

FermionicSum half(std::size_t p, std::size_t M) {
  FermionicSum out(M);
  out.add(FermionicString::single(M, p, FOp::Cre), Coeff::one());
  out.add(FermionicString::single(M, p, FOp::Ann), Coeff(-1));
  return out;
}

std::vector<Element> basis(Family f, std::size_t M) {
  if (M < 2) throw Error("Lie families need at least two modes");
  std::vector<Element> out;
  auto idx = [](std::size_t k) { return std::to_string(k); };
  if (f != Family::Pairs)
    for (std::size_t p = 0; p < M; ++p)
      for (std::size_t q = p + 1; q < M; ++q) out.push_back({"A^" + idx(p) + "_" + idx(q), single(p, q, M)});
  if (f != Family::Singles)
    for (std::size_t p = 0; p < M; ++p)
      for (std::size_t q = p + 1; q < M; ++q) out.push_back({"A^" + idx(p) + idx(q), pair(p, q, M)});
  if (f == Family::SinglesPairsHalf)
    for (std::size_t p = 0; p < M; ++p) out.push_back({"A^" + idx(p), half(p, M)});
  return out;
}

std::size_t expected_dimension(Family f, std::size_t M) {
  switch (f) {
    case Family::Singles:
    case Family::Pairs: return M * (M - 1) / 2;
    case Family::SinglesPairs: return M * (M - 1);
    case Family::SinglesPairsHalf: return M * M;
  }
  return 0;
}

std::optional<std::vector<Rational>> expand(const FermionicSum& x, const std::vector<Element>& b) {
  // Basis elements have pairwise disjoint supports, so each coordinate is read
  // off the first string of its element and the residual must vanish.
  FermionicSum target = expand_holes(x);
  std::vector<Rational> coords;
  FermionicSum residual = target;
  for (const auto& e : b) {
    const auto& [lead, beta] = *e.op.begin();
    Coeff ratio = target.coefficient(lead);
    if (ratio.is_zero()) {
      coords.emplace_back(0);
      continue;
    }
    // beta is +-1 for every basis element
    ratio = ratio * beta.conj();
    if (!ratio.is_exact() || ratio.has_symbols() || !ratio.exact().im.is_zero()) return std::nullopt;
    const auto& re = ratio.exact().re;
    if (re.terms().size() != 1 || re.terms().begin()->first != Monomial{}) return std::nullopt;
    Rational r = re.constant();
    coords.push_back(r);
    residual -= e.op * Coeff(r);
  }
  if (!residual.empty()) return std::nullopt;
  return coords;
}

bool ClosureReport::all_ok() const {
  if (!closed) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

ClosureReport verify_closure(Family f, std::size_t M) {
  ClosureReport rep;
  rep.family = f;
  rep.modes = M;
  auto b = basis(f, M);
  rep.dimension = b.size();
  rep.checks.push_back({"dimension", b.size() == expected_dimension(f, M)});

  const std::size_t n = b.size();
  rep.closed = true;
  std::vector<std::vector<std::vector<Rational>>> fabc(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t i = 0; i < n && rep.closed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = expand(commutator(b[i].op, b[j].op), b);
      if (!coords) {
        rep.closed = false;
        break;
      }
      fabc[i][j] = *coords;
    }
  if (!rep.closed) return rep;
  rep.structure_constants = fabc;

  bool anti = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        if (fabc[i][j][c] != -fabc[j][i][c]) anti = false;
  rep.checks.push_back({"antisymmetry", anti});

  // sum_d f_ij^d f_dk^e + cyclic = 0
  bool jacobi = true;
  for (std::size_t i = 0; i < n && jacobi; ++i)
    for (std::size_t j = 0; j < n && jacobi; ++j)
      for (std::size_t k = 0; k < n && jacobi; ++k)
        for (std::size_t e = 0; e < n; ++e) {
          Rational s(0);
          for (std::size_t d = 0; d < n; ++d)
            s += fabc[i][j][d] * fabc[d][k][e] + fabc[j][k][d] * fabc[d][i][e] + fabc[k][i][d] * fabc[d][j][e];
          if (!s.is_zero()) {
            jacobi = false;
            break;
          }
        }
  rep.checks.push_back({"jacobi", jacobi});

  bool r_ss = true, r_pp = true, r_sp = true, r_hh = true, r_sh = true, r_ph = true;
  for (std::size_t p = 0; p < M; ++p)
    for (std::size_t q = 0; q < M; ++q) {
      if (p == q) continue;
      for (std::size_t r = 0; r < M; ++r)
        for (std::size_t s = 0; s < M; ++s) {
          if (r == s) continue;
          FermionicSum rhs_s = kd(q, r, single_any(p, s, M)) - kd(q, s, single_any(p, r, M)) -
                               kd(p, r, single_any(q, s, M)) + kd(p, s, single_any(q, r, M));
          FermionicSum rhs_p = kd(q, r, pair_any(p, s, M)) - kd(q, s, pair_any(p, r, M)) -
                               kd(p, r, pair_any(q, s, M)) + kd(p, s, pair_any(q, r, M));
          r_ss = r_ss && same(commutator(single_any(p, q, M), single_any(r, s, M)), rhs_s);
          if (f != Family::Singles) {
            r_pp = r_pp && same(commutator(pair_any(p, q, M), pair_any(r, s, M)), rhs_s);
            r_sp = r_sp && same(commutator(single_any(p, q, M), pair_any(r, s, M)), rhs_p);
          }
        }
      if (f == Family::SinglesPairsHalf) {
        r_hh = r_hh && same(commutator(half(p, M), half(q, M)), (pair_any(p, q, M) - single_any(p, q, M)) * Coeff(2));
        for (std::size_t r = 0; r < M; ++r) {
          FermionicSum rhs = kd(q, r, half(p, M)) - kd(p, r, half(q, M));
          r_sh = r_sh && same(commutator(single_any(p, q, M), half(r, M)), rhs);
          r_ph = r_ph && same(commutator(pair_any(p, q, M), half(r, M)), -rhs);
        }
      }
    }
  rep.checks.push_back({"[A^p_q,A^r_s]", r_ss});
  if (f != Family::Singles) {
    rep.checks.push_back({"[A^pq,A^rs]=[A^p_q,A^r_s]", r_pp});
    rep.checks.push_back({"[A^p_q,A^rs]", r_sp});
  }
  if (f == Family::SinglesPairsHalf) {
    rep.checks.push_back({"[A^p,A^q]=2(A^pq-A^p_q)", r_hh});
    rep.checks.push_back({"[A^p_q,A^r]", r_sh});
    rep.checks.push_back({"[A^pq,A^r]=-[A^p_q,A^r]", r_ph});
  }
  return rep;
}

bool verify_isomorphism(Family f, std::size_t M) {
  auto rep = verify_closure(f, M);
  if (!rep.closed) return false;
  auto img = images(f, M);
  const std::size_t n = img.size();
  if (n != rep.dimension) return false;
  std::vector<std::vector<Rational>> flat;
  for (const auto& m : img) flat.push_back(m.a);
  if (rank(flat) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RMat lhs = bracket(img[i], img[j]);
      RMat rhs(img[i].n);
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& fc = rep.structure_constants[i][j][c];
        if (fc.is_zero()) continue;
        for (std::size_t k = 0; k < rhs.a.size(); ++k) rhs.a[k] += fc * img[c].a[k];
      }
      if (lhs.a != rhs.a) return false;
    }
  return true;
}

}  // namespace fc::lie
