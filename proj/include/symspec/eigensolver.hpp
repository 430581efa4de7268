// Dense eigenvalue computation for general complex matrices with
// residual-verified results and c-product normalization.
//
// The kernel is LAPACK's zgeev when LAPACKE is available (SYMSPEC_HAVE_LAPACKE)
// and Eigen's ComplexEigenSolver otherwise; both sit behind the same trace and
// residual postconditions, which is what the callers rely on.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef SYMSPEC_HAVE_LAPACKE
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

namespace symspec {

/// Eigensolver failure carrying the indices that did not converge
/// (empty when the backend cannot attribute the failure).
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::vector<int> failed)
      : std::runtime_error(what), failed_indices(std::move(failed)) {}
  std::vector<int> failed_indices;
};

struct EigenResult {
  Eigen::VectorXcd values;   // unordered; sorting is the caller's policy
  Eigen::MatrixXcd vectors;  // columns; empty unless requested
  bool has_vectors = false;
  double residual_bound = 0.0;  // max_i ||M v_i - lambda_i v_i|| / ||M||_F
};

namespace detail {

inline void check_square_finite(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_all: matrix not square");
  if (!m.allFinite()) throw std::invalid_argument("eig_all: non-finite entries");
}

#ifdef SYMSPEC_HAVE_LAPACKE
inline void eig_kernel(const Eigen::MatrixXcd& m, bool want_vectors,
                       Eigen::VectorXcd& values, Eigen::MatrixXcd& vectors) {
  const lapack_int n = lapack_int(m.rows());
  Eigen::MatrixXcd a = m;  // zgeev overwrites
  values.resize(n);
  if (want_vectors) vectors.resize(n, n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, a.data(), n,
      values.data(), nullptr, 1, want_vectors ? vectors.data() : nullptr,
      want_vectors ? n : 1);
  if (info != 0) {
    std::vector<int> failed;
    if (info > 0)
      for (int i = 0; i < int(info); ++i) failed.push_back(i);
    throw NumericalError("eig_all: zgeev did not converge (info=" +
                             std::to_string(info) + ")",
                         std::move(failed));
  }
}
#else
inline void eig_kernel(const Eigen::MatrixXcd& m, bool want_vectors,
                       Eigen::VectorXcd& values, Eigen::MatrixXcd& vectors) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, want_vectors);
  if (es.info() != Eigen::Success) {
    std::vector<int> failed(m.rows());
    for (int i = 0; i < int(m.rows()); ++i) failed[i] = i;
    throw NumericalError("eig_all: ComplexEigenSolver did not converge",
                         std::move(failed));
  }
  values = es.eigenvalues();
  if (want_vectors) vectors = es.eigenvectors();
}
#endif

}  // namespace detail

/// All eigenvalues (and optionally unit eigenvectors) of a dense complex
/// matrix. Postconditions enforced on every solve: sum(lambda) = tr(M) and
/// sum(lambda^2) = tr(M^2), both to 1e-9 * ||M||_F * n, plus per-pair
/// residuals when vectors were requested.
inline EigenResult eig_all(const Eigen::MatrixXcd& m, bool want_vectors = false) {
  detail::check_square_finite(m);
  EigenResult r;
  const int n = int(m.rows());
  if (n == 0) return r;

  detail::eig_kernel(m, want_vectors, r.values, r.vectors);
  r.has_vectors = want_vectors;

  const double norm = m.norm();
  const double tol = 1e-9 * std::max(1.0, norm) * n;

  const std::complex<double> tr = m.trace();
  std::complex<double> tr2(0.0, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr2 += m(i, j) * m(j, i);

  std::complex<double> s1(0.0, 0.0), s2(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    s1 += r.values(i);
    s2 += r.values(i) * r.values(i);
  }
  if (std::abs(s1 - tr) > tol)
    throw NumericalError("eig_all: eigenvalue sum disagrees with trace", {});
  if (std::abs(s2 - tr2) > tol * std::max(1.0, norm))
    throw NumericalError("eig_all: eigenvalue-square sum disagrees with tr(M^2)", {});

  if (want_vectors) {
    const Eigen::MatrixXcd mv = m * r.vectors;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double res = (mv.col(i) - r.values(i) * r.vectors.col(i)).norm() /
                         r.vectors.col(i).norm();
      worst = std::max(worst, res);
    }
    r.residual_bound = worst / std::max(norm, 1e-300);
  }
  return r;
}

/// c-product square of a vector: sum v_j^2, no conjugation.
inline std::complex<double> c_norm2(const Eigen::VectorXcd& v) {
  std::complex<double> s(0.0, 0.0);
  for (int i = 0; i < v.size(); ++i) s += v(i) * v(i);
  return s;
}

struct CNormalized {
  Eigen::VectorXcd vector;
  /// Self-orthogonality under the c-product: the defining symptom of an
  /// eigenvector pair coalescing at an exceptional point. When set, `vector`
  /// is returned unscaled.
  bool ep_proximity = false;
};

/// Scale v so that sum v_j^2 = 1, or flag EP proximity when the c-norm
/// vanishes (|c_norm2| < 1e-12 * ||v||^2).
inline CNormalized c_normalize(const Eigen::VectorXcd& v) {
  const std::complex<double> c2 = c_norm2(v);
  const double h2 = v.squaredNorm();
  if (std::abs(c2) < 1e-12 * h2) return {v, true};
  return {v / std::sqrt(c2), false};
}

}  // namespace symspec
