#include "oracle.hpp"

#include <bit>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

namespace {
const std::complex<double> kI(0.0, 1.0);

std::complex<double> i_pow(int k) {
  static const std::complex<double> table[4] = {1.0, kI, -1.0, -kI};
  return table[((k % 4) + 4) % 4];
}
}  // namespace

Mat identity(std::size_t M) {
  return Mat::Identity(Eigen::Index{1} << M, Eigen::Index{1} << M);
}

Mat annihilator(std::size_t M, std::size_t p) {
  const std::uint64_t dim = std::uint64_t{1} << M;
  const std::uint64_t bit = std::uint64_t{1} << (M - 1 - p);
  const std::uint64_t lower_modes = ~((bit << 1) - 1) & (dim - 1);  // modes q < p
  Mat a = Mat::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    if (!(col & bit)) continue;
    int sign = std::popcount(col & lower_modes) % 2 ? -1 : 1;
    a(col ^ bit, col) = sign;
  }
  return a;
}

Mat creator(std::size_t M, std::size_t p) {
  return annihilator(M, p).adjoint();
}

Mat matrix(const fc::PauliString& s) {
  static const Mat X = (Mat(2, 2) << 0, 1, 1, 0).finished();
  static const Mat Y = (Mat(2, 2) << 0, -kI, kI, 0).finished();
  static const Mat Z = (Mat(2, 2) << 1, 0, 0, -1).finished();
  static const Mat I2 = Mat::Identity(2, 2);
  Mat out = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < s.width(); ++q) {
    const Mat* f = &I2;
    switch (s.op(q)) {
      case 'X': f = &X; break;
      case 'Y': f = &Y; break;
      case 'Z': f = &Z; break;
      default: break;
    }
    Mat next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * *f;
    out = next;
  }
  return i_pow(s.phase()) * out;
}

Mat matrix(const fc::MajoranaString& s) {
  const std::size_t M = s.width();
  Mat out = identity(M);
  for (std::size_t k = 0; k < 2 * M; ++k) {
    if (!s.occupied().get(k)) continue;
    std::size_t p = k / 2;
    Mat g = k % 2 == 0 ? Mat(creator(M, p) + annihilator(M, p)) : Mat(kI * (creator(M, p) - annihilator(M, p)));
    out = out * g;
  }
  return i_pow(s.phase()) * out;
}

Mat matrix(const fc::FermionicString& s) {
  const std::size_t M = s.width();
  if (s.is_zero()) return Mat::Zero(Eigen::Index{1} << M, Eigen::Index{1} << M);
  Mat out = identity(M);
  for (const auto& f : s.factors()) {
    Mat a = annihilator(M, f.mode);
    Mat c = creator(M, f.mode);
    switch (f.op) {
      case fc::FOp::Ann: out = out * a; break;
      case fc::FOp::Cre: out = out * c; break;
      case fc::FOp::Num: out = out * (c * a); break;
      case fc::FOp::Hole: out = out * (a * c); break;
    }
  }
  return i_pow(s.phase()) * out;
}

Mat expm(const Mat& a) {
  return a.exp();
}

Mat conjugate(const Mat& o, const Mat& g, double theta, bool hermitian) {
  Mat u = hermitian ? expm(kI * theta * g) : expm(theta * g);
  return u.adjoint() * o * u;
}

double max_diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::int64_t unit_frobenius(const Mat& m) {
  std::int64_t n = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) n += std::llround(std::norm(m(r, c)));
  return n;
}

Eigen::VectorXd eigenvalues(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return r & mask; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != rank && (rows[k] & mask)) rows[k] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace oracle
