#pragma once

// Pure and mixed qubit states, the canonical three-qubit family, and
// seeded random ensembles.
//
// Basis ordering is |q_A q_B q_C> with A the most significant bit, so for a
// three-qubit state amplitude index 4 is |100>.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohq/linalg.hpp"

namespace cohq {

inline constexpr double pure_norm_tol = 1e-12;
inline constexpr double density_tol = 1e-10;
inline constexpr double canonical_norm_tol = 1e-10;

class PureState {
 public:
  /// Throws InvalidStateError unless dim is a power of two and the squared
  /// moduli sum to 1 within pure_norm_tol.
  explicit PureState(std::vector<Complex> amplitudes);

  /// Scales an arbitrary non-zero vector to unit norm.
  static PureState normalized(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and eigenvalues >= -density_tol.
  /// Failures throw InvalidStateError carrying the offending residual.
  explicit DensityMatrix(ComplexMatrix matrix);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  double purity() const;

 private:
  ComplexMatrix matrix_;
};

/// Amplitudes lambda_0..lambda_4 and phase theta of the canonical form
///   l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>.
struct CanonicalThreeQubit {
  std::array<double, 5> lambda{};
  double theta = 0.0;

  /// Throws InvalidStateError naming the first violated field.
  void validate() const;
  double norm_deviation() const;
};

/// Builds a validated parameter set from four amplitudes, completing
/// lambda_4 = sqrt(1 - sum of squares).
CanonicalThreeQubit complete_last(std::span<const double> first_four, double theta = 0.0,
                                  double tol = canonical_norm_tol);

enum class EnsembleKind { haar_pure, ginibre };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::haar_pure;
  std::size_t rank = 1;  // ginibre only
  std::uint64_t seed = 0;
  std::size_t count = 1;

  void validate(std::size_t dim) const;
};

std::string_view to_string(EnsembleKind kind);
EnsembleKind parse_ensemble_kind(std::string_view text);
/// e.g. "haar-pure dim=4" or "ginibre dim=4 rank=2".
std::string describe(const EnsembleSpec& spec, std::size_t dim);

DensityMatrix pure_to_density(const PureState& psi);

/// Traces out every subsystem not in `keep`. Kept subsystems stay in their
/// original order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep);

/// Three-qubit convenience wrappers around partial_trace; subsystems are
/// numbered A=0, B=1, C=2.
DensityMatrix reduce_three_qubit(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

PureState canonical_state(const CanonicalThreeQubit& p);
/// theta = 0 with lambda_0 > 0 and lambda_4 > 0.
PureState ghz_member(const CanonicalThreeQubit& p);
/// theta = 0 with lambda_4 = 0 and lambda_0 > 0.
PureState w_member(const CanonicalThreeQubit& p);

// --- Seeded sampling -------------------------------------------------------
//
// Sample k of a stream is generated from its own generator seeded with
// sample_seed(seed, k), so any index can be produced independently and
// results do not depend on how indices are split across workers.

inline constexpr std::string_view generator_name = "mt19937_64/splitmix64-substream";

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

PureState sample_pure_at(const EnsembleSpec& spec, std::size_t dim, std::uint64_t index);
DensityMatrix sample_density_at(const EnsembleSpec& spec, std::size_t dim, std::uint64_t index);
/// Dispatches on spec.kind; haar-pure samples are returned as projectors.
DensityMatrix sample_state_at(const EnsembleSpec& spec, std::size_t dim, std::uint64_t index);

std::vector<PureState> sample_pure(const EnsembleSpec& spec, std::size_t dim);
std::vector<DensityMatrix> sample_density(const EnsembleSpec& spec, std::size_t dim);

enum class ThetaMode { zero, uniform };

/// Squared amplitudes flat-Dirichlet on the 4-simplex; theta is 0 or
/// uniform on [0, pi].
CanonicalThreeQubit sample_canonical_at(std::uint64_t seed, std::uint64_t index, ThetaMode mode);
std::vector<CanonicalThreeQubit> sample_canonical(std::uint64_t seed, std::size_t count,
                                                  ThetaMode mode);

// --- Density-matrix JSON ---------------------------------------------------
//
// {"dim": n, "re": [n*n row-major], "im": [n*n row-major]}

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(std::string_view text);
void write_density_file(const std::filesystem::path& path, const DensityMatrix& rho);
DensityMatrix read_density_file(const std::filesystem::path& path);

}  // namespace cohq
