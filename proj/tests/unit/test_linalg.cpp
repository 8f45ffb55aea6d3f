#include "cohq/linalg.hpp"

#include <cmath>
#include <random>

#include "cohq/errors.hpp"
#include "cohq/states.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace cohq;
using cohq::testing::random_hermitian;
using cohq::testing::random_matrix;

namespace {

const Complex kI{0.0, 1.0};

double orthonormality_residual(const ComplexMatrix& v) {
  return max_abs_diff(matmul(adjoint(v), v), ComplexMatrix::identity(v.cols()));
}

ComplexMatrix reconstruct(const HermitianEigenDecomposition& e) {
  const auto d = ComplexMatrix::diagonal(e.eigenvalues);
  return matmul(matmul(e.eigenvectors, d), adjoint(e.eigenvectors));
}

}  // namespace

TEST_CASE("pauli matrices square to identity") {
  const auto& p = pauli();
  for (const auto* m : {&p.sigma_x, &p.sigma_y, &p.sigma_z}) {
    CHECK(max_abs_diff(matmul(*m, *m), p.identity) == 0.0);
  }
  CHECK(p.sigma_y(0, 1) == -kI);
  CHECK(p.sigma_y(1, 0) == kI);
}

TEST_CASE("kron") {
  const auto& p = pauli();
  CHECK(kron(p.identity, p.identity) == ComplexMatrix::identity(4));
  const auto yy = kron(p.sigma_y, p.sigma_y);
  CHECK(yy(0, 3) == Complex(-1.0));
  CHECK(yy(3, 0) == Complex(-1.0));
  CHECK(kron(p.sigma_z, p.identity) == ComplexMatrix::diagonal({1, 1, -1, -1}));

  const ComplexMatrix row{{1.0, 2.0}};
  const auto k = kron(row, p.sigma_x);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
}

TEST_CASE("kron mixed-product property") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_matrix(gen, 2, 2);
    const auto b = random_matrix(gen, 2, 2);
    const auto c = random_matrix(gen, 2, 2);
    const auto d = random_matrix(gen, 2, 2);
    CHECK(max_abs_diff(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d))) <= 1e-10);
  }
}

TEST_CASE("adjoint") {
  const auto& p = pauli();
  CHECK(adjoint(p.sigma_y) == p.sigma_y);

  const ComplexMatrix row{{kI, 0.0}};
  const auto col = adjoint(row);
  CHECK(col.rows() == 2);
  CHECK(col.cols() == 1);
  CHECK(col(0, 0) == -kI);
  CHECK(col(1, 0) == Complex(0.0));

  std::mt19937_64 gen(3);
  const auto a = random_matrix(gen, 3, 5);
  CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("matmul") {
  const auto& p = pauli();
  std::mt19937_64 gen(5);
  const auto a = random_matrix(gen, 4, 4);
  CHECK(max_abs_diff(matmul(a, ComplexMatrix::identity(4)), a) == 0.0);
  CHECK(max_abs_diff(matmul(p.sigma_x, p.sigma_y), kI * p.sigma_z) == 0.0);

  const auto tall = random_matrix(gen, 4, 2);
  const auto prod = matmul(a, tall);
  CHECK(prod.rows() == 4);
  CHECK(prod.cols() == 2);
  CHECK_THROWS_AS(matmul(tall, a), DimensionError);
}

TEST_CASE("matrix construction rejects bad shapes and non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(0, 2), DimensionError);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, std::nan("")}}), DimensionError);
}

TEST_CASE("hermitian_eigen examples") {
  SUBCASE("diagonal") {
    const auto e = hermitian_eigen(ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4}));
    const std::vector<double> expected{0.1, 0.2, 0.3, 0.4};
    for (std::size_t i = 0; i < 4; ++i) CHECK(e.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-15));
  }
  SUBCASE("sigma_x") {
    const auto e = hermitian_eigen(pauli().sigma_x);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(max_abs_diff(reconstruct(e), pauli().sigma_x) <= 1e-14);
  }
  SUBCASE("Bell projector") {
    const auto e = hermitian_eigen(cohq::testing::bell_state().matrix());
    CHECK(std::abs(e.eigenvalues[0]) <= 1e-15);
    CHECK(std::abs(e.eigenvalues[1]) <= 1e-15);
    CHECK(std::abs(e.eigenvalues[2]) <= 1e-15);
    CHECK(e.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("hermitian_eigen errors name the violated check") {
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), DimensionError);
  const ComplexMatrix skew{{1.0, 0.5}, {0.0, 1.0}};
  try {
    hermitian_eigen(skew);
    FAIL("expected NotHermitianError");
  } catch (const NotHermitianError& e) {
    CHECK(std::string(e.what()).find("0.5") != std::string::npos);
  }
  // within tolerance is fine
  const ComplexMatrix almost{{1.0, 0.5}, {0.5 + 1e-12, 1.0}};
  CHECK_NOTHROW(hermitian_eigen(almost));
}

TEST_CASE("hermitian_eigen reconstruction and orthonormality on random G + G^dagger") {
  std::mt19937_64 gen(2024);
  double worst_recon = 0.0;
  double worst_orth = 0.0;
  double worst_oracle = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = std::size_t{2} << (trial % 3);  // 2, 4, 8
    const auto a = random_hermitian(gen, n);
    const auto e = hermitian_eigen(a);
    worst_recon = std::max(worst_recon, max_abs_diff(reconstruct(e), a));
    worst_orth = std::max(worst_orth, orthonormality_residual(e.eigenvectors));
    CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    const auto ref = oracle::hermitian_eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i) worst_oracle = std::max(worst_oracle, std::abs(ref[i] - e.eigenvalues[i]));
  }
  CHECK(worst_recon <= 1e-10);
  CHECK(worst_orth <= 1e-10);
  CHECK(worst_oracle <= 1e-10);
}

TEST_CASE("psd_sqrt") {
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) <= 1e-15);
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal({4, 9, 0, 1})), ComplexMatrix::diagonal({2, 3, 0, 1})) <=
        1e-15);

  // tiny negative eigenvalues clamp, larger ones are errors
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal({1, -5e-11})), ComplexMatrix::diagonal({1, 0})) == 0.0);
  try {
    psd_sqrt(ComplexMatrix::diagonal({1, -1e-6}));
    FAIL("expected NotPsdError");
  } catch (const NotPsdError& e) {
    CHECK(std::string(e.what()).find("1e-06") != std::string::npos);
  }
}

TEST_CASE("psd_sqrt squares back on sampled density matrices") {
  const EnsembleSpec spec{EnsembleKind::ginibre, 3, 77, 1000};
  double worst = 0.0;
  for (std::size_t k = 0; k < spec.count; ++k) {
    const auto rho = sample_density_at(spec, 4, k);
    const auto root = psd_sqrt(rho.matrix());
    CHECK(hermiticity_residual(root) <= 1e-15);
    worst = std::max(worst, max_abs_diff(matmul(root, root), rho.matrix()));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("singular_values examples") {
  CHECK(singular_values(ComplexMatrix::identity(4)) == std::vector<double>{1, 1, 1, 1});
  const auto sv = singular_values(ComplexMatrix::diagonal({-3, 2}));
  CHECK(sv[0] == doctest::Approx(3.0));
  CHECK(sv[1] == doctest::Approx(2.0));

  const auto rho = sample_density_at({EnsembleKind::ginibre, 4, 5, 1}, 4, 0);
  auto eig = hermitian_eigen(rho.matrix()).eigenvalues;
  std::reverse(eig.begin(), eig.end());
  const auto s = singular_values(rho.matrix());
  for (std::size_t i = 0; i < 4; ++i) CHECK(s[i] == doctest::Approx(eig[i]).epsilon(1e-12));
}

TEST_CASE("singular_values agree with an SVD oracle and are unitarily invariant") {
  std::mt19937_64 gen(99);
  double worst = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t rows = 1 + trial % 5;
    const std::size_t cols = 1 + (trial / 5) % 5;
    const auto a = random_matrix(gen, rows, cols);
    const auto mine = singular_values(a);
    CHECK(mine.size() == cols);
    CHECK(std::is_sorted(mine.begin(), mine.end(), std::greater<>()));
    const auto ref = oracle::singular_values(a);
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(ref[i] - mine[i]));
    for (std::size_t i = ref.size(); i < mine.size(); ++i) worst = std::max(worst, mine[i]);
  }
  CHECK(worst <= 1e-12);

  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_matrix(gen, 4, 4);
    const auto right = hermitian_eigen(matmul(adjoint(a), a)).eigenvectors;
    const auto left = hermitian_eigen(matmul(a, adjoint(a))).eigenvectors;
    const auto rotated = matmul(matmul(adjoint(left), a), right);
    const auto s0 = singular_values(a);
    const auto s1 = singular_values(rotated);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s0[i] - s1[i]) <= 1e-10);
  }
}

TEST_CASE("singular_values keep tiny values accurate") {
  // rank-one 4x4: three exact zeros must not come out near sqrt(eps)
  const ComplexMatrix v(4, 1, {0.3, Complex(0.1, 0.2), -0.5, 0.7});
  const auto s = singular_values(matmul(v, adjoint(v)));
  CHECK(s[1] <= 1e-15);
  CHECK(s[3] <= 1e-15);
}

TEST_CASE("singular_values of zero-padded wide matrices") {
  // Padding a wide block with zero rows leaves columns that decay toward
  // underflow; they must not disturb the nonzero values.
  std::mt19937_64 gen(7);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const auto block = random_matrix(gen, rows, 4);
    ComplexMatrix padded(4, 4);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < 4; ++j) padded(i, j) = block(i, j);
    }
    const auto mine = singular_values(padded);
    const auto ref = oracle::singular_values(block);
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(ref[i] - mine[i]));
    for (std::size_t i = ref.size(); i < mine.size(); ++i) worst = std::max(worst, mine[i]);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("induced_one_norm") {
  CHECK(induced_one_norm(ComplexMatrix::identity(4)) == 1.0);
  CHECK(induced_one_norm(Complex(0.25) * ComplexMatrix::identity(4)) == 0.25);
  const double p = 0.9;
  ComplexMatrix werner = Complex((1 - p) / 4) * ComplexMatrix::identity(4);
  werner(0, 0) += p / 2;
  werner(0, 3) += p / 2;
  werner(3, 0) += p / 2;
  werner(3, 3) += p / 2;
  CHECK(induced_one_norm(werner) == doctest::Approx(0.925).epsilon(1e-15));
}

TEST_CASE("norm_candidates") {
  const auto id = norm_candidates(ComplexMatrix::identity(4));
  CHECK(id.trace_norm == doctest::Approx(4.0));
  CHECK(id.frobenius == doctest::Approx(2.0));
  CHECK(id.trace_of_square == doctest::Approx(4.0));
  CHECK(id.induced_one == doctest::Approx(1.0));
  CHECK(id.max_singular == doctest::Approx(1.0));

  const auto rho = sample_density_at({EnsembleKind::ginibre, 4, 9, 1}, 4, 0);
  CHECK(norm_candidates(rho.matrix()).trace_norm == doctest::Approx(1.0).epsilon(1e-12));

  const auto d = norm_candidates(ComplexMatrix::diagonal({0.5, 0.25, 0.25, 0.0}));
  CHECK(d.trace_of_square == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(d.max_singular == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.max_singular > d.trace_of_square);
  CHECK(d.frobenius == doctest::Approx(std::sqrt(0.375)).epsilon(1e-15));
}
