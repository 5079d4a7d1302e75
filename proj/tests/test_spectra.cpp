#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "unruh/model.hpp"
#include "unruh/spectra.hpp"
#include "unruh/tolerances.hpp"

#include "test_helpers.hpp"

using namespace unruh;
using testing::make_rng;
using testing::random_hermitian;

TEST_CASE("eigenvalues of a diagonal matrix come back sorted") {
  ComplexMatrix m(3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  const Spectrum s = hermitian_eigenvalues(m);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("half Pauli-X splits into -1/2 and 1/2") {
  ComplexMatrix m(2);
  m(0, 1) = 0.5;
  m(1, 0) = 0.5;
  const Spectrum s = hermitian_eigenvalues(m);
  CHECK(std::abs(s.eigenvalues[0] + 0.5) < 1e-14);
  CHECK(std::abs(s.eigenvalues[1] - 0.5) < 1e-14);
}

TEST_CASE("negative eigenvalue of the coupling block at the endpoint") {
  // the 2x2 block of the A-transpose at r_b = r_c = pi/4:
  // [[sin^2 sin^2 / 2, cos cos / 2], [cos cos / 2, 0]] = [[1/8, 1/4], [1/4, 0]]
  ComplexMatrix m(2);
  m(0, 0) = 0.125;
  m(0, 1) = 0.25;
  m(1, 0) = 0.25;
  const Spectrum s = hermitian_eigenvalues(m);
  CHECK(std::abs(s.eigenvalues[0] - (1.0 - std::sqrt(17.0)) / 16.0) < 1e-12);
}

TEST_CASE("eigensolver matches closed-form roots on random Hermitian input") {
  auto rng = make_rng();
  for (int t = 0; t < 500; ++t) {
    const bool complex_entries = t % 2 == 0;
    const ComplexMatrix m2 = random_hermitian(2, rng, complex_entries);
    const auto got2 = hermitian_eigenvalues(m2).eigenvalues;
    const auto want2 = testing::eig2_closed(m2);
    CHECK(std::abs(got2[0] - want2[0]) <= 1e-12);
    CHECK(std::abs(got2[1] - want2[1]) <= 1e-12);

    const ComplexMatrix m3 = random_hermitian(3, rng, complex_entries);
    const auto got3 = hermitian_eigenvalues(m3).eigenvalues;
    const auto want3 = testing::eig3_closed(m3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(got3[k] - want3[k]) <= 1e-12);
  }
}

TEST_CASE("eigenvalue sum equals the trace for unit-trace inputs") {
  auto rng = make_rng(3);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho =
        testing::random_density({Mode::A, Mode::BI, Mode::CI}, rng);
    const Spectrum s = hermitian_eigenvalues(rho.matrix());
    CHECK(std::abs(s.sum() - 1.0) <= 1e-11);
  }
}

TEST_CASE("trace norm of the identity is the dimension") {
  CHECK(trace_norm(ComplexMatrix::identity(8)) ==
        doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("trace norm of any density matrix is 1") {
  auto rng = make_rng(17);
  for (int t = 0; t < 25; ++t) {
    const DensityMatrix rho = testing::random_density({Mode::A, Mode::CI}, rng);
    CHECK(std::abs(trace_norm(rho.matrix()) - 1.0) <= 1e-11);
  }
  // every state the model constructs, across a grid
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      const AccelPair p{std::numbers::pi / 4 * i / 8,
                        std::numbers::pi / 4 * j / 8};
      CHECK(std::abs(trace_norm(rho_abici(p).matrix()) - 1.0) <= 1e-11);
      const TwoModeReductions red = two_mode_reductions(p);
      CHECK(std::abs(trace_norm(red.ab.matrix()) - 1.0) <= 1e-11);
      CHECK(std::abs(trace_norm(red.bc.matrix()) - 1.0) <= 1e-11);
    }
  }
}

TEST_CASE("trace norm of the A-transpose at infinite acceleration") {
  const double q = std::numbers::pi / 4;
  const ComplexMatrix pt = partial_transpose(rho_abici({q, q}), Mode::A);
  CHECK(std::abs(trace_norm(pt) - (1.0 + (std::sqrt(17.0) - 1.0) / 8.0)) <=
        1e-13);
}

TEST_CASE("negativity of a product state vanishes") {
  ComplexMatrix a(2), b(2);
  a(0, 0) = 0.5;
  a(1, 1) = 0.5;
  b(0, 0) = 1.0;
  const DensityMatrix rho(std::vector<Mode>{Mode::A, Mode::BI}, kron(a, b));
  CHECK(std::abs(negativity(rho, Mode::A)) <= 1e-12);
  CHECK(std::abs(negativity(rho, Mode::BI)) <= 1e-12);
}

TEST_CASE("negativity of the inertial GHZ state is 1") {
  CHECK(std::abs(negativity(rho_abici({0.0, 0.0}), Mode::A) - 1.0) <= 1e-12);
}

TEST_CASE("negativity at infinite acceleration") {
  const double q = std::numbers::pi / 4;
  CHECK(std::abs(negativity(rho_abici({q, q}), Mode::A) -
                 (std::sqrt(17.0) - 1.0) / 8.0) <= 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;  // m(1,0) left at 0
  CHECK_THROWS_AS((void)hermitian_eigenvalues(m), std::invalid_argument);
  CHECK_THROWS_AS((void)trace_norm(m), std::invalid_argument);
}

TEST_CASE("zero matrix has an all-zero spectrum") {
  const Spectrum s = hermitian_eigenvalues(ComplexMatrix(4));
  for (double e : s.eigenvalues) CHECK(e == 0.0);
}
