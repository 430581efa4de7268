#include "symspec/banded.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace symspec;

TEST_CASE("x matrix entries follow the p^2+q^2 normalization") {
  const Banded1D x1 = x_matrix(1);
  CHECK(x1(0, 1) == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(x1.bandwidth() == 1);

  const Banded1D x2 = x_matrix(2);
  CHECK(x2(1, 2) == Catch::Approx(1.0).epsilon(1e-15));

  const Banded1D x4 = x_matrix(4);
  CHECK(x4(3, 4) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("x matrix agrees with Hermite-function quadrature") {
  // independent route: numerical integral of phi_3(q) q phi_4(q)
  const double quad = oracle::x_power_element(3, 4, 1);
  CHECK(quad == Catch::Approx(std::sqrt(2.0)).margin(1e-9));
  CHECK(x_matrix(4)(3, 4) == Catch::Approx(quad).margin(1e-9));

  for (int m = 0; m <= 5; ++m)
    for (int n = m; n <= 5; ++n)
      CHECK(x_matrix(5)(m, n) ==
            Catch::Approx(oracle::x_power_element(m, n, 1)).margin(1e-9));
}

TEST_CASE("parity selection zeros the forbidden entries") {
  const int n_max = 12;
  const Banded1D x = x_matrix(n_max);
  const Banded1D x2 = x2_matrix(n_max);
  const Banded1D x4 = x4_matrix(n_max);
  const Banded1D p2 = p2_matrix(n_max);
  for (int i = 0; i <= n_max; ++i)
    for (int j = 0; j <= n_max; ++j) {
      if ((i + j) % 2 == 0) CHECK(x(i, j) == 0.0);
      if ((i + j) % 2 == 1) {
        CHECK(x2(i, j) == 0.0);
        CHECK(x4(i, j) == 0.0);
        CHECK(p2(i, j) == 0.0);
      }
    }
}

TEST_CASE("p^2 + x^2 is exactly the diagonal 2n+1") {
  for (int n_max : {0, 1, 5, 20, 80}) {
    const Eigen::MatrixXd sum = p2_matrix(n_max).dense() + x2_matrix(n_max).dense();
    for (int i = 0; i <= n_max; ++i)
      for (int j = 0; j <= n_max; ++j) {
        const double expect = (i == j) ? 2.0 * i + 1.0 : 0.0;
        CHECK(std::abs(sum(i, j) - expect) < 1e-14);
      }
  }
}

TEST_CASE("p^2 entries and quadrature oracle") {
  const Banded1D p2 = p2_matrix(4);
  CHECK(p2(0, 0) == Catch::Approx(0.5).epsilon(1e-15));
  CHECK(p2(0, 2) == Catch::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-14));
  CHECK(p2(0, 2) == Catch::Approx(oracle::p2_element(0, 2)).margin(1e-9));
  CHECK(p2(1, 1) == Catch::Approx(oracle::p2_element(1, 1)).margin(1e-9));
  CHECK(p2(2, 4) == Catch::Approx(oracle::p2_element(2, 4)).margin(1e-9));
}

TEST_CASE("x^4 entries: ladder closed forms and quadrature") {
  const Banded1D x4 = x4_matrix(6);
  CHECK(x4(0, 0) == Catch::Approx(0.75).epsilon(1e-14));
  CHECK(x4(0, 4) == Catch::Approx(std::sqrt(24.0) / 4.0).epsilon(1e-14));
  CHECK(x4(0, 1) == 0.0);
  CHECK(x4(0, 0) == Catch::Approx(oracle::x_power_element(0, 0, 4)).margin(1e-9));
  CHECK(x4(0, 4) == Catch::Approx(oracle::x_power_element(0, 4, 4)).margin(1e-9));
  CHECK(x4(2, 4) == Catch::Approx(oracle::x_power_element(2, 4, 4)).margin(1e-8));
}

TEST_CASE("x^4 equals the leading block of the padded fourth power") {
  for (int n_max : {0, 3, 9}) {
    const Eigen::MatrixXd big = x_matrix(n_max + 4).dense();
    const Eigen::MatrixXd pow4 = (big * big * big * big).eval();
    const Banded1D x4 = x4_matrix(n_max);
    for (int i = 0; i <= n_max; ++i)
      for (int j = 0; j <= n_max; ++j)
        CHECK(std::abs(x4(i, j) - pow4(i, j)) < 1e-13);
  }
}

TEST_CASE("quartic 1D eigenvalues: frozen oracle values") {
  // oracle procedure: diagonalize at twice the cutoff and require small drift
  const auto e60 = quartic_1d_eigenvalues(60, 4);
  const auto e120 = quartic_1d_eigenvalues(120, 4);
  CHECK(std::abs(e60[0] - e120[0]) < 1e-9);
  CHECK(std::abs(e60[1] - e120[1]) < 1e-9);
  // frozen from the converged run
  CHECK(e120[0] == Catch::Approx(1.060362090484).margin(1e-9));
  CHECK(e120[1] == Catch::Approx(3.799673029800).margin(1e-9));
  CHECK(e60[0] == Catch::Approx(1.060362).margin(1e-6));
  CHECK(e60[1] == Catch::Approx(3.799673).margin(1e-6));
}

TEST_CASE("quartic 1D eigenvalues: trusted-window enforcement") {
  CHECK_THROWS_AS(quartic_1d_eigenvalues(10, 6), std::invalid_argument);
  CHECK_THROWS_AS(quartic_1d_eigenvalues(10, -1), std::invalid_argument);
  CHECK_NOTHROW(quartic_1d_eigenvalues(10, 5));
  CHECK(quartic_1d_eigenvalues(10, 0).empty());
}

TEST_CASE("quartic 1D eigenvalues ascend and converge on the low window") {
  const auto e30 = quartic_1d_eigenvalues(30, 6);
  const auto e60 = quartic_1d_eigenvalues(60, 6);
  const auto e120 = quartic_1d_eigenvalues(120, 6);
  for (std::size_t i = 1; i < e60.size(); ++i) CHECK(e60[i] > e60[i - 1]);
  // cutoff doubling leaves the convergence-limited low window in place;
  // at N=60 the lowest six are stable to 1e-8, at N=30 only the lowest few
  for (int i = 0; i < 6; ++i) CHECK(std::abs(e60[std::size_t(i)] - e120[std::size_t(i)]) < 1e-8);
  CHECK(std::abs(e30[0] - e60[0]) < 1e-8);
  CHECK(std::abs(e30[1] - e60[1]) < 1e-6);
  CHECK(std::abs(e30[2] - e60[2]) < 1e-6);
}

TEST_CASE("quartic 1D eigenvectors alternate parity") {
  const Quartic1DBasis q = quartic_1d_eigensystem(40);
  for (int state = 0; state < 10; ++state) {
    double off_parity = 0.0;
    for (int i = 0; i <= 40; ++i)
      if ((i % 2) != (state % 2))
        off_parity = std::max(off_parity, std::abs(q.vectors(i, state)));
    CHECK(off_parity < 1e-10);
  }
}

TEST_CASE("Banded1D rejects malformed input") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(3, 3);
  bad(0, 2) = 1.0;  // outside bandwidth 1, and asymmetric
  CHECK_THROWS_AS(Banded1D(3, 1, bad), std::invalid_argument);
  CHECK_THROWS_AS(x_matrix(-1), std::invalid_argument);
}
