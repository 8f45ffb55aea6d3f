#include "cohq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "cohq/errors.hpp"

namespace cohq {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DimensionError("matrix entry is not finite");
    }
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
        << b.cols();
    throw DimensionError(msg.str());
  }
}

// A 2x2 unitary acting on the (p, q) plane. Columns p and q of the identity
// are replaced by (pp, qp) and (pq, qq).
struct PlaneRotation {
  Complex pp, pq, qp, qq;
};

// Rotation that diagonalizes the Hermitian block [[app, apq], [conj(apq), aqq]]
// under J^dagger * block * J. `apq` must be non-zero.
PlaneRotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double modulus = std::abs(apq);
  const Complex phase = std::conj(apq / modulus);
  const double theta = (aqq - app) / (2.0 * modulus);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  return {Complex(c, 0.0), Complex(s, 0.0), -s * phase, c * phase};
}

// columns <- columns * J
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const PlaneRotation& j) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = mp * j.pp + mq * j.qp;
    m(k, q) = mp * j.pq + mq * j.qq;
  }
}

// rows <- J^dagger * rows
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const PlaneRotation& j) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = std::conj(j.pp) * mp + std::conj(j.qp) * mq;
    m(q, k) = std::conj(j.pq) * mp + std::conj(j.qq) * mq;
  }
}

constexpr int kMaxSweeps = 100;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  require_finite(m.entries());
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

const PauliSet& pauli() {
  static const PauliSet set{
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return set;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex scale = a(ia, ja);
      if (scale == Complex{}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = scale * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z = std::conj(z);
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "matmul: inner dimensions differ (" << a.rows() << "x" << a.cols() << " times "
        << b.rows() << "x" << b.cols() << ")";
    throw DimensionError(msg.str());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace of a non-square matrix");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double hermiticity_residual(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermiticity check on a non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

HermitianEigenDecomposition hermitian_eigen(const ComplexMatrix& a, double hermitian_tol) {
  if (!a.is_square()) {
    throw DimensionError("hermitian_eigen: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
  }
  const double residual = hermiticity_residual(a);
  if (residual > hermitian_tol) {
    std::ostringstream msg;
    msg << "hermitian_eigen: max |a - a^dagger| = " << residual << " exceeds " << hermitian_tol;
    throw NotHermitianError(msg.str());
  }

  const std::size_t n = a.rows();
  ComplexMatrix work = a;
  for (std::size_t i = 0; i < n; ++i) {
    work(i, i) = work(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex mean = 0.5 * (work(i, j) + std::conj(work(j, i)));
      work(i, j) = mean;
      work(j, i) = std::conj(mean);
    }
  }
  ComplexMatrix vectors = ComplexMatrix::identity(n);

  // Sweep until every off-diagonal entry is exactly zero. After a few sweeps
  // entries too small to move either diagonal entry are dropped outright.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(work(p, q));
    }
    if (off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double modulus = std::abs(work(p, q));
        if (modulus == 0.0) continue;
        const double app = work(p, p).real();
        const double aqq = work(q, q).real();
        const double g = 100.0 * modulus;
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          work(p, q) = 0.0;
          work(q, p) = 0.0;
          continue;
        }
        const PlaneRotation j = jacobi_rotation(app, aqq, work(p, q));
        rotate_columns(work, p, q, j);
        rotate_rows(work, p, q, j);
        work(p, q) = 0.0;
        work(q, p) = 0.0;
        work(p, p) = work(p, p).real();
        work(q, q) = work(q, q).real();
        rotate_columns(vectors, p, q, j);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return work(l, l).real() < work(r, r).real();
  });

  HermitianEigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vectors(i, order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const auto eig = hermitian_eigen(a);
  const std::size_t n = a.rows();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = eig.eigenvalues[k];
    if (w < -psd_clamp) {
      std::ostringstream msg;
      msg << "psd_sqrt: eigenvalue " << w << " is below -" << psd_clamp;
      throw NotPsdError(msg.str());
    }
    roots[k] = std::sqrt(std::max(w, 0.0));
  }
  ComplexMatrix out(n, n);
  const auto& v = eig.eigenvectors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += v(i, k) * roots[k] * std::conj(v(j, k));
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  // One-sided (Hestenes) Jacobi: orthogonalize columns pairwise; the
  // singular values are the final column norms. Wide input is handled via
  // its adjoint, padding the extra values with zeros.
  if (a.rows() < a.cols()) {
    auto values = singular_values(adjoint(a));
    values.resize(a.cols(), 0.0);
    return values;
  }
  ComplexMatrix work = a;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  constexpr double kOrthTol = 1e-15;
  // Couplings below this fraction of |a|_F^2 cannot move any column by a
  // representable amount; rotating them only drives tiny columns into
  // denormals.
  constexpr double kNegligible = 1e-32;
  double frob2 = 0.0;
  for (const auto& z : work.entries()) frob2 += std::norm(z);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < m; ++k) {
          alpha += std::norm(work(k, p));
          beta += std::norm(work(k, q));
          gamma += std::conj(work(k, p)) * work(k, q);
        }
        const double modulus = std::abs(gamma);
        if (modulus <= kOrthTol * std::sqrt(alpha * beta) || modulus <= kNegligible * frob2) continue;
        rotate_columns(work, p, q, jacobi_rotation(alpha, beta, gamma));
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) sum += std::norm(work(k, j));
    values[j] = std::sqrt(sum);
  }
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double induced_one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double column = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) column += std::abs(a(i, j));
    best = std::max(best, column);
  }
  return best;
}

NormCandidates norm_candidates(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("norm_candidates: matrix is not square");
  const auto sv = singular_values(a);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double s : sv) {
    sum += s;
    sum_sq += s * s;
  }
  return {sum, std::sqrt(sum_sq), trace(matmul(a, a)).real(), induced_one_norm(a), sv.front()};
}

}  // namespace cohq
