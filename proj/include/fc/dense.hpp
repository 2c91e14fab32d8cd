#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fc/fermion.hpp"
#include "fc/majorana.hpp"
#include "fc/pauli.hpp"

namespace fc::dense {

using Matrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

inline constexpr std::size_t kMaxModes = 12;

// Basis |n_0 n_1 ... n_{M-1}> with mode 0 the most significant bit of the index.
inline std::uint64_t mode_bit(std::size_t mode, std::size_t M) {
  return std::uint64_t{1} << (M - 1 - mode);
}

// A string maps each basis state to at most one basis state.
struct Image {
  std::uint64_t row;
  cplx amp;
};

std::optional<Image> apply(const PauliString& s, std::uint64_t col);
std::optional<Image> apply(const MajoranaString& s, std::uint64_t col);
std::optional<Image> apply(const FermionicString& s, std::uint64_t col);

void check_size(std::size_t M);

// Parallel column kernel.
template <class S>
Matrix to_matrix(const OperatorSum<S>& sum, std::size_t M, const Bindings& b = {}) {
  check_size(M);
  if (sum.width() != 0 && sum.width() != M) throw WidthMismatch(sum.width(), M);
  const std::int64_t dim = std::int64_t{1} << M;
  std::vector<const S*> strs;
  std::vector<cplx> coeffs;
  for (const auto& [s, c] : sum) {
    strs.push_back(&s);
    coeffs.push_back(c.value(b));
  }
  Matrix out = Matrix::Zero(dim, dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t col = 0; col < dim; ++col) {
    for (std::size_t t = 0; t < strs.size(); ++t) {
      auto img = apply(*strs[t], static_cast<std::uint64_t>(col));
      if (img) out(static_cast<Eigen::Index>(img->row), col) += coeffs[t] * img->amp;
    }
  }
  return out;
}

template <class S>
Matrix to_matrix(const S& s, std::size_t M) {
  return to_matrix(OperatorSum<S>(s), M);
}

// Serial reference: every string is a product of Kronecker-built factor matrices.
Matrix reference_matrix(const PauliString& s);
Matrix reference_matrix(const MajoranaString& s);
Matrix reference_matrix(const FermionicString& s);

template <class S>
Matrix to_matrix_reference(const OperatorSum<S>& sum, std::size_t M, const Bindings& b = {}) {
  check_size(M);
  const Eigen::Index dim = Eigen::Index{1} << M;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [s, c] : sum) out += c.value(b) * reference_matrix(s);
  return out;
}

// exp(theta * A) for anti-Hermitian A.
Matrix expm_anti_hermitian(const Matrix& A, double theta);
// exp(i * theta * H) for Hermitian H.
Matrix expm_i_hermitian(const Matrix& H, double theta);

// U^dagger O U with U = exp(theta G) (anti-Hermitian G) or exp(i theta G) (Hermitian G).
Matrix matrix_conjugate_oracle(const Matrix& o, const Matrix& g, double theta, bool hermitian_generator);

double frobenius_norm_sq(const Matrix& m);
Eigen::VectorXd spectrum(const Matrix& hermitian);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& m, double tol);

}  // namespace fc::dense
