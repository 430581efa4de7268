#include "symspec/eigensolver.hpp"

#include "symspec/hamiltonian.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace symspec;
using cd = std::complex<double>;

namespace {

Eigen::MatrixXcd random_complex(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cd(u(rng), u(rng));
  return m;
}

}  // namespace

TEST_CASE("diagonal matrix returns its diagonal") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 3.0;
  m(1, 1) = m(2, 2) = m(3, 3) = 5.0;
  const EigenResult r = eig_all(m);
  std::vector<double> evs;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(r.values(i).imag()) < 1e-14);
    evs.push_back(r.values(i).real());
  }
  std::sort(evs.begin(), evs.end());
  CHECK(evs == std::vector<double>{3.0, 5.0, 5.0, 5.0});
}

TEST_CASE("2x2 complex-symmetric closed form") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = u(rng), b = u(rng);
    Eigen::MatrixXcd m(2, 2);
    m << cd(a, 0), cd(0, b), cd(0, b), cd(a, 0);
    const EigenResult r = eig_all(m);
    std::vector<cd> evs{r.values(0), r.values(1)};
    std::sort(evs.begin(), evs.end(),
              [](cd x, cd y) { return x.imag() < y.imag(); });
    CHECK(std::abs(evs[0] - cd(a, -std::abs(b))) < 1e-12);
    CHECK(std::abs(evs[1] - cd(a, std::abs(b))) < 1e-12);
  }
}

TEST_CASE("trace identities hold on random matrices") {
  for (int n : {1, 2, 7, 30}) {
    const Eigen::MatrixXcd m = random_complex(n, unsigned(100 + n));
    const EigenResult r = eig_all(m);  // would throw on violation
    cd sum(0, 0);
    for (int i = 0; i < n; ++i) sum += r.values(i);
    CHECK(std::abs(sum - m.trace()) < 1e-9 * std::max(1.0, m.norm()) * n);
  }
}

TEST_CASE("determinant consistency at small order") {
  for (int n : {2, 3, 4, 5, 6}) {
    const Eigen::MatrixXcd m = random_complex(n, unsigned(7 * n));
    const EigenResult r = eig_all(m);
    cd prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= r.values(i);
    const cd det = m.determinant();
    CHECK(std::abs(prod - det) < 1e-9 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("eigenvectors satisfy the residual bound") {
  const Eigen::MatrixXcd m = random_complex(40, 17);
  const EigenResult r = eig_all(m, true);
  REQUIRE(r.has_vectors);
  CHECK(r.residual_bound <= 1e-10);
  // spot-check one pair
  const Eigen::VectorXcd lhs = m * r.vectors.col(3);
  const Eigen::VectorXcd rhs = r.values(3) * r.vectors.col(3);
  CHECK((lhs - rhs).norm() <= 1e-10 * m.norm() * 10);
}

TEST_CASE("model blocks have conjugation-closed spectra") {
  BlockAssembler assembler(ModelSpec::harmonic(0.0, 6));
  for (const Irrep& irrep : assembler.group().table().irreps) {
    if (assembler.basis(irrep).empty()) continue;
    const EigenResult r = eig_all(assembler.matrix(irrep, 0.8));
    const double scale = std::max(1.0, r.values.cwiseAbs().maxCoeff());
    for (int i = 0; i < r.values.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < r.values.size(); ++j)
        best = std::min(best, std::abs(std::conj(r.values(i)) - r.values(j)));
      CHECK(best < 1e-9 * scale);
    }
  }
}

TEST_CASE("invalid input is rejected") {
  Eigen::MatrixXcd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(eig_all(rect), std::invalid_argument);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = cd(std::nan(""), 0.0);
  CHECK_THROWS_AS(eig_all(bad), std::invalid_argument);
  CHECK(eig_all(Eigen::MatrixXcd(0, 0)).values.size() == 0);
}

TEST_CASE("c-product normalization") {
  Eigen::VectorXcd real3(3);
  real3 << 2.0, 0.0, 0.0;
  const CNormalized r = c_normalize(real3);
  CHECK_FALSE(r.ep_proximity);
  CHECK(std::abs(r.vector(0) - cd(1.0, 0.0)) < 1e-15);

  Eigen::VectorXcd unit(2);
  unit << std::sqrt(0.5), std::sqrt(0.5);
  const CNormalized ru = c_normalize(unit);
  CHECK_FALSE(ru.ep_proximity);
  CHECK((ru.vector - unit).norm() < 1e-14);

  // (1, i) is self-orthogonal under the c-product: 1 + i^2 = 0
  Eigen::VectorXcd selforth(2);
  selforth << cd(1.0, 0.0), cd(0.0, 1.0);
  CHECK(c_normalize(selforth).ep_proximity);
  CHECK(std::abs(c_norm2(selforth)) < 1e-14);
}

TEST_CASE("eigenvector c-norm collapses toward an exceptional point") {
  // closed-form EP family: [[1, ig],[ig, -1]] coalesces at g = 1
  auto family = [](double g) {
    Eigen::MatrixXcd m(2, 2);
    m << cd(1, 0), cd(0, g), cd(0, g), cd(-1, 0);
    return m;
  };
  const EigenResult far = eig_all(family(0.2), true);
  CHECK_FALSE(c_normalize(far.vectors.col(0)).ep_proximity);

  const EigenResult close = eig_all(family(0.999999999), true);
  const cd cn = c_norm2(close.vectors.col(0));
  CHECK(std::abs(cn) < 1e-4);  // approaching self-orthogonality
  CHECK(c_normalize(eig_all(family(1.0), true).vectors.col(0)).ep_proximity);
}
