// One-dimensional harmonic-oscillator ladder algebra.
//
// All operators are expressed in the eigenbasis of H_HO = p^2 + q^2
// (eigenvalues 2n+1), which fixes <n|x|n+1> = sqrt((n+1)/2).
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace symspec {

/// Real symmetric matrix with entries confined to |row - col| <= bandwidth,
/// stored dense (desk-scale orders only).
class Banded1D {
 public:
  Banded1D(int order, int bandwidth, Eigen::MatrixXd entries)
      : order_(order), bandwidth_(bandwidth), m_(std::move(entries)) {
    if (order_ <= 0 || m_.rows() != order_ || m_.cols() != order_)
      throw std::invalid_argument("Banded1D: order/entry shape mismatch");
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) {
        if (std::abs(i - j) > bandwidth_ && m_(i, j) != 0.0)
          throw std::invalid_argument("Banded1D: entry outside declared band");
        if (m_(i, j) != m_(j, i))
          throw std::invalid_argument("Banded1D: not symmetric");
      }
  }

  int order() const { return order_; }
  int bandwidth() const { return bandwidth_; }
  double operator()(int row, int col) const { return m_(row, col); }
  const Eigen::MatrixXd& dense() const { return m_; }

 private:
  int order_;
  int bandwidth_;
  Eigen::MatrixXd m_;
};

/// Position operator x; couples n <-> n+1 only.
inline Banded1D x_matrix(int n_max) {
  if (n_max < 0) throw std::invalid_argument("x_matrix: n_max must be >= 0");
  const int n = n_max + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i)
    m(i, i + 1) = m(i + 1, i) = std::sqrt((i + 1) / 2.0);
  return Banded1D(n, 1, std::move(m));
}

/// x^2: diagonal n + 1/2, super-superdiagonal +sqrt((n+1)(n+2))/2.
inline Banded1D x2_matrix(int n_max) {
  if (n_max < 0) throw std::invalid_argument("x2_matrix: n_max must be >= 0");
  const int n = n_max + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = i + 0.5;
  for (int i = 0; i + 2 < n; ++i)
    m(i, i + 2) = m(i + 2, i) = std::sqrt(double(i + 1) * (i + 2)) / 2.0;
  return Banded1D(n, 2, std::move(m));
}

/// p^2: diagonal n + 1/2, super-superdiagonal -sqrt((n+1)(n+2))/2.
/// p2_matrix + x2_matrix = diag(2n+1) exactly.
inline Banded1D p2_matrix(int n_max) {
  if (n_max < 0) throw std::invalid_argument("p2_matrix: n_max must be >= 0");
  const int n = n_max + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = i + 0.5;
  for (int i = 0; i + 2 < n; ++i)
    m(i, i + 2) = m(i + 2, i) = -std::sqrt(double(i + 1) * (i + 2)) / 2.0;
  return Banded1D(n, 2, std::move(m));
}

/// x^4 as the leading block of X^4 computed at padded cutoff n_max+4.
/// x^4 couples |dn| <= 4 only, so the retained entries are free of
/// truncation contamination.
inline Banded1D x4_matrix(int n_max) {
  if (n_max < 0) throw std::invalid_argument("x4_matrix: n_max must be >= 0");
  const Eigen::MatrixXd x = x_matrix(n_max + 4).dense();
  const Eigen::MatrixXd x2 = x * x;
  const Eigen::MatrixXd x4 = x2 * x2;
  const int n = n_max + 1;
  Eigen::MatrixXd m = x4.topLeftCorner(n, n);
  // symmetrize away last-bit roundoff from the matrix products
  m = ((m + m.transpose()) / 2.0).eval();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(i - j) > 4) m(i, j) = 0.0;
  return Banded1D(n, 4, std::move(m));
}

/// Ascending eigenvalues of the truncated 1D quartic oscillator p^2 + x^4.
/// Only the variationally trusted window count <= n_max/2 may be requested.
inline std::vector<double> quartic_1d_eigenvalues(int n_max, int count) {
  if (n_max < 0) throw std::invalid_argument("quartic_1d_eigenvalues: n_max must be >= 0");
  if (count < 0 || 2 * count > n_max)
    throw std::invalid_argument(
        "quartic_1d_eigenvalues: count exceeds trusted window (count <= n_max/2)");
  Eigen::MatrixXd h = p2_matrix(n_max).dense() + x4_matrix(n_max).dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quartic_1d_eigenvalues: eigensolver failed");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

/// Full eigendecomposition of the truncated 1D quartic oscillator.
/// Column i of the returned matrix expands the i-th quartic eigenfunction
/// over the harmonic basis.
struct Quartic1DBasis {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

inline Quartic1DBasis quartic_1d_eigensystem(int n_max) {
  Eigen::MatrixXd h = p2_matrix(n_max).dense() + x4_matrix(n_max).dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quartic_1d_eigensystem: eigensolver failed");
  return Quartic1DBasis{es.eigenvalues(), es.eigenvectors()};
}

}  // namespace symspec
