#include "fc/dense.hpp"

#include <bit>

#include "fc/error.hpp"

namespace fc::dense {

namespace {

const cplx I1(0.0, 1.0);

cplx i_pow(int k) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

// Parity of occupations of modes strictly below `mode`.
double tail_sign(std::uint64_t state, std::size_t mode, std::size_t M) {
  if (mode == 0) return 1.0;
  std::uint64_t mask = ((std::uint64_t{1} << mode) - 1) << (M - mode);
  return std::popcount(state & mask) % 2 ? -1.0 : 1.0;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix m2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const Matrix& id2() {
  static const Matrix m = m2(1, 0, 0, 1);
  return m;
}
const Matrix& px() {
  static const Matrix m = m2(0, 1, 1, 0);
  return m;
}
const Matrix& py() {
  static const Matrix m = m2(0, -I1, I1, 0);
  return m;
}
const Matrix& pz() {
  static const Matrix m = m2(1, 0, 0, -1);
  return m;
}

// Kronecker product with `site` on qubit q, Z on qubits below q, identity above.
Matrix jw_factor(std::size_t M, std::size_t q, const Matrix& site) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t k = 0; k < M; ++k) out = kron(out, k < q ? pz() : (k == q ? site : id2()));
  return out;
}

}  // namespace

void check_size(std::size_t M) {
  if (M > kMaxModes) throw SizeGuard("dense oracle limited to " + std::to_string(kMaxModes) + " modes");
}

std::optional<Image> apply(const PauliString& s, std::uint64_t col) {
  const std::size_t M = s.width();
  cplx amp = i_pow(s.phase());
  std::uint64_t row = col;
  for (std::size_t q = 0; q < M; ++q) {
    bool x = s.x().get(q), z = s.z().get(q);
    if (!x && !z) continue;
    std::uint64_t bit = mode_bit(q, M);
    bool one = col & bit;
    if (x) row ^= bit;
    if (x && z)
      amp *= one ? -I1 : I1;
    else if (z && one)
      amp = -amp;
  }
  return Image{row, amp};
}

std::optional<Image> apply(const MajoranaString& s, std::uint64_t col) {
  const std::size_t M = s.width();
  cplx amp = i_pow(s.phase());
  std::uint64_t state = col;
  auto ones = s.occupied().ones();
  for (auto it = ones.rbegin(); it != ones.rend(); ++it) {
    std::size_t mode = *it / 2;
    std::uint64_t bit = mode_bit(mode, M);
    amp *= tail_sign(state, mode, M);
    if (*it % 2 == 1) amp *= (state & bit) ? -I1 : I1;
    state ^= bit;
  }
  return Image{state, amp};
}

std::optional<Image> apply(const FermionicString& s, std::uint64_t col) {
  if (s.is_zero()) return std::nullopt;
  const std::size_t M = s.width();
  cplx amp = i_pow(s.phase());
  std::uint64_t state = col;
  auto f = s.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    std::uint64_t bit = mode_bit(it->mode, M);
    bool occ = state & bit;
    switch (it->op) {
      case FOp::Num:
        if (!occ) return std::nullopt;
        break;
      case FOp::Hole:
        if (occ) return std::nullopt;
        break;
      case FOp::Ann:
        if (!occ) return std::nullopt;
        amp *= tail_sign(state, it->mode, M);
        state ^= bit;
        break;
      case FOp::Cre:
        if (occ) return std::nullopt;
        amp *= tail_sign(state, it->mode, M);
        state ^= bit;
        break;
    }
  }
  return Image{state, amp};
}

Matrix reference_matrix(const PauliString& s) {
  const std::size_t M = s.width();
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t q = 0; q < M; ++q) {
    char c = s.op(q);
    out = kron(out, c == 'X' ? px() : c == 'Y' ? py() : c == 'Z' ? pz() : id2());
  }
  return i_pow(s.phase()) * out;
}

Matrix reference_matrix(const MajoranaString& s) {
  const std::size_t M = s.width();
  const Eigen::Index dim = Eigen::Index{1} << M;
  Matrix out = Matrix::Identity(dim, dim);
  for (auto k : s.occupied().ones()) out = out * jw_factor(M, k / 2, k % 2 == 0 ? px() : py());
  return i_pow(s.phase()) * out;
}

Matrix reference_matrix(const FermionicString& s) {
  const std::size_t M = s.width();
  const Eigen::Index dim = Eigen::Index{1} << M;
  if (s.is_zero()) return Matrix::Zero(dim, dim);
  static const Matrix lower = m2(0, 1, 0, 0);  // a: |1> -> |0>
  static const Matrix upper = m2(0, 0, 1, 0);  // a^dagger
  Matrix out = Matrix::Identity(dim, dim);
  for (const auto& f : s.factors()) {
    switch (f.op) {
      case FOp::Ann: out = out * jw_factor(M, f.mode, lower); break;
      case FOp::Cre: out = out * jw_factor(M, f.mode, upper); break;
      case FOp::Num: out = out * (jw_factor(M, f.mode, upper) * jw_factor(M, f.mode, lower)); break;
      case FOp::Hole: out = out * (jw_factor(M, f.mode, lower) * jw_factor(M, f.mode, upper)); break;
    }
  }
  return i_pow(s.phase()) * out;
}

Matrix expm_i_hermitian(const Matrix& H, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::exp(I1 * theta * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix expm_anti_hermitian(const Matrix& A, double theta) {
  // A = -iK with K = iA Hermitian, so exp(theta A) = exp(-i theta K).
  Matrix K = I1 * A;
  return expm_i_hermitian(K, -theta);
}

Matrix matrix_conjugate_oracle(const Matrix& o, const Matrix& g, double theta, bool hermitian_generator) {
  Matrix U = hermitian_generator ? expm_i_hermitian(g, theta) : expm_anti_hermitian(g, theta);
  return U.adjoint() * o * U;
}

double frobenius_norm_sq(const Matrix& m) {
  return m.squaredNorm();
}

Eigen::VectorXd spectrum(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

}  // namespace fc::dense
