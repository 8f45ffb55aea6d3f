#pragma once

// Dense complex matrices and the handful of spectral tools needed for
// 2-, 4- and 8-dimensional operators.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cohq {

using Complex = std::complex<double>;

/// Row-major dense complex matrix. Entries are always finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Nested-list literal, one inner list per row.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

struct PauliSet {
  ComplexMatrix identity;
  ComplexMatrix sigma_x;
  ComplexMatrix sigma_y;
  ComplexMatrix sigma_z;
};

/// The 2x2 Pauli matrices, sigma_y = -i|0><1| + i|1><0|.
const PauliSet& pauli();

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest entrywise modulus of a - a^dagger.
double hermiticity_residual(const ComplexMatrix& a);

struct HermitianEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns
};

/// Cyclic complex Jacobi. Throws DimensionError for non-square input and
/// NotHermitianError when max |a - a^dagger| exceeds `hermitian_tol`.
HermitianEigenDecomposition hermitian_eigen(const ComplexMatrix& a, double hermitian_tol = 1e-10);

/// Eigenvalues in [-psd_clamp, 0) count as zero; anything lower is an error.
inline constexpr double psd_clamp = 1e-10;

/// Principal square root of a Hermitian PSD matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Descending singular values (one-sided Jacobi, accurate to eps*|a| even
/// for the smallest values).
std::vector<double> singular_values(const ComplexMatrix& a);

/// Maximum column sum of entry moduli.
double induced_one_norm(const ComplexMatrix& a);

struct NormCandidates {
  double trace_norm;       // sum of singular values
  double frobenius;        // sqrt(sum sigma^2)
  double trace_of_square;  // Re Tr(a^2)
  double induced_one;      // max column sum
  double max_singular;
};

NormCandidates norm_candidates(const ComplexMatrix& a);

}  // namespace cohq
