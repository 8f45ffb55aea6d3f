#include "cohq/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "cohq/errors.hpp"
#include "json.hpp"

namespace cohq {

namespace {

constexpr double kFamilyTol = 1e-12;
constexpr std::array<const char*, 5> kLambdaNames = {"lambda0", "lambda1", "lambda2", "lambda3",
                                                     "lambda4"};

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double squared_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& z : v) sum += std::norm(z);
  return sum;
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(sample_seed(seed, index));
}

std::vector<Complex> gaussian_vector(std::mt19937_64& gen, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) {
    const double re = normal(gen);
    const double im = normal(gen);
    z = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (!is_power_of_two(amplitudes_.size())) {
    throw InvalidStateError("pure state dimension " + std::to_string(amplitudes_.size()) +
                            " is not a power of two");
  }
  const double deviation = std::abs(squared_norm(amplitudes_) - 1.0);
  if (!(deviation <= pure_norm_tol)) {
    std::ostringstream msg;
    msg << "pure state is not normalized: |sum |a|^2 - 1| = " << deviation;
    throw InvalidStateError(msg.str());
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidStateError("cannot normalize a zero or non-finite vector");
  }
  for (auto& z : amplitudes) z /= norm;
  return PureState(std::move(amplitudes));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw InvalidStateError("density matrix is not square");
  const double herm = hermiticity_residual(matrix_);
  if (herm > density_tol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herm;
    throw InvalidStateError(msg.str());
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - 1.0) > density_tol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << (tr.imag() < 0 ? "-" : "+")
        << std::abs(tr.imag()) << "i, expected 1";
    throw InvalidStateError(msg.str());
  }
  const auto eig = hermitian_eigen(matrix_, density_tol);
  if (eig.eigenvalues.front() < -density_tol) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: smallest eigenvalue "
        << eig.eigenvalues.front();
    throw InvalidStateError(msg.str());
  }
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double sum = 0.0;
  for (const auto& z : matrix_.entries()) sum += std::norm(z);
  return sum;
}

double CanonicalThreeQubit::norm_deviation() const {
  double sum = 0.0;
  for (double l : lambda) sum += l * l;
  return std::abs(sum - 1.0);
}

void CanonicalThreeQubit::validate() const {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!std::isfinite(lambda[i]) || lambda[i] < 0.0) {
      throw InvalidStateError(std::string(kLambdaNames[i]) + " must be a finite non-negative number");
    }
  }
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw InvalidStateError("theta must lie in [0, pi]");
  }
  const double deviation = norm_deviation();
  if (!(deviation <= canonical_norm_tol)) {
    std::ostringstream msg;
    msg << "lambda normalization violated: |sum lambda^2 - 1| = " << deviation;
    throw InvalidStateError(msg.str());
  }
}

CanonicalThreeQubit complete_last(std::span<const double> first_four, double theta, double tol) {
  if (first_four.size() != 4) throw InvalidStateError("complete_last needs exactly four amplitudes");
  CanonicalThreeQubit p;
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    p.lambda[i] = first_four[i];
    sum += first_four[i] * first_four[i];
  }
  const double rest = 1.0 - sum;
  if (rest < -tol) {
    std::ostringstream msg;
    msg << "lambda0..lambda3 already exceed unit norm: sum of squares = " << sum;
    throw InvalidStateError(msg.str());
  }
  p.lambda[4] = std::sqrt(std::max(rest, 0.0));
  p.theta = theta;
  p.validate();
  return p;
}

void EnsembleSpec::validate(std::size_t dim) const {
  if (count < 1) throw PreconditionError("ensemble count must be at least 1");
  if (kind == EnsembleKind::ginibre && (rank < 1 || rank > dim)) {
    throw PreconditionError("ginibre rank " + std::to_string(rank) + " outside [1, " +
                            std::to_string(dim) + "]");
  }
}

std::string_view to_string(EnsembleKind kind) {
  return kind == EnsembleKind::haar_pure ? "haar-pure" : "ginibre";
}

EnsembleKind parse_ensemble_kind(std::string_view text) {
  if (text == "haar-pure" || text == "pure") return EnsembleKind::haar_pure;
  if (text == "ginibre") return EnsembleKind::ginibre;
  throw PreconditionError("unknown ensemble '" + std::string(text) + "'");
}

std::string describe(const EnsembleSpec& spec, std::size_t dim) {
  std::ostringstream out;
  out << to_string(spec.kind) << " dim=" << dim;
  if (spec.kind == EnsembleKind::ginibre) out << " rank=" << spec.rank;
  return out.str();
}

DensityMatrix pure_to_density(const PureState& psi) {
  const std::size_t n = psi.dim();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep) {
  const std::size_t parts = subsystem_dims.size();
  std::size_t total = 1;
  for (std::size_t d : subsystem_dims) {
    if (d == 0) throw DimensionError("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != rho.dim()) {
    throw DimensionError("partial_trace: subsystem dimensions multiply to " + std::to_string(total) +
                         " but the state has dimension " + std::to_string(rho.dim()));
  }
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty() || kept.size() >= parts || kept.back() >= parts) {
    throw DimensionError("partial_trace: keep set must be a non-empty proper subset of subsystems");
  }

  std::vector<std::size_t> stride(parts, 1);
  for (std::size_t s = parts - 1; s-- > 0;) stride[s] = stride[s + 1] * subsystem_dims[s + 1];

  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < parts; ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }

  // Full-space offset contributed by each multi-index over a subsystem list.
  auto offsets = [&](const std::vector<std::size_t>& systems) {
    std::size_t count = 1;
    for (std::size_t s : systems) count *= subsystem_dims[s];
    std::vector<std::size_t> out(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rem = idx;
      std::size_t offset = 0;
      for (std::size_t k = systems.size(); k-- > 0;) {
        const std::size_t d = subsystem_dims[systems[k]];
        offset += (rem % d) * stride[systems[k]];
        rem /= d;
      }
      out[idx] = offset;
    }
    return out;
  };

  const auto kept_off = offsets(kept);
  const auto traced_off = offsets(traced);
  ComplexMatrix out(kept_off.size(), kept_off.size());
  for (std::size_t r = 0; r < kept_off.size(); ++r) {
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex sum{};
      for (std::size_t t : traced_off) sum += rho(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix reduce_three_qubit(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  static constexpr std::array<std::size_t, 3> kQubits = {2, 2, 2};
  return partial_trace(rho, kQubits, std::span<const std::size_t>(keep.begin(), keep.size()));
}

PureState canonical_state(const CanonicalThreeQubit& p) {
  p.validate();
  std::vector<Complex> amps(8);
  amps[0b000] = p.lambda[0];
  amps[0b100] = std::polar(p.lambda[1], p.theta);
  amps[0b101] = p.lambda[2];
  amps[0b110] = p.lambda[3];
  amps[0b111] = p.lambda[4];
  if (p.norm_deviation() <= pure_norm_tol) return PureState(std::move(amps));
  return PureState::normalized(std::move(amps));
}

PureState ghz_member(const CanonicalThreeQubit& p) {
  p.validate();
  if (p.theta > kFamilyTol) throw PreconditionError("GHZ-class form requires theta = 0");
  if (p.lambda[0] <= kFamilyTol) throw PreconditionError("GHZ-class form requires lambda0 > 0");
  if (p.lambda[4] <= kFamilyTol) throw PreconditionError("GHZ-class form requires lambda4 > 0");
  return canonical_state(p);
}

PureState w_member(const CanonicalThreeQubit& p) {
  p.validate();
  if (p.theta > kFamilyTol) throw PreconditionError("W-class form requires theta = 0");
  if (p.lambda[4] > kFamilyTol) throw PreconditionError("W-class form requires lambda4 = 0");
  if (p.lambda[0] <= kFamilyTol) {
    throw PreconditionError("W-class form requires lambda0 > 0 (lambda0 = 0 gives C_AB = C_AC = 0)");
  }
  return canonical_state(p);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step keyed by the index, then one more finalizer round so
  // neighbouring (seed, index) pairs decorrelate.
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)) ^ index);
}

PureState sample_pure_at(const EnsembleSpec& spec, std::size_t dim, std::uint64_t index) {
  if (spec.kind != EnsembleKind::haar_pure) {
    throw PreconditionError("sample_pure needs a haar-pure ensemble");
  }
  auto gen = substream(spec.seed, index);
  return PureState::normalized(gaussian_vector(gen, dim));
}

DensityMatrix sample_density_at(const EnsembleSpec& spec, std::size_t dim, std::uint64_t index) {
  if (spec.kind != EnsembleKind::ginibre) {
    throw PreconditionError("sample_density needs a ginibre ensemble");
  }
  spec.validate(dim);
  auto gen = substream(spec.seed, index);
  const ComplexMatrix g(dim, spec.rank, gaussian_vector(gen, dim * spec.rank));
  ComplexMatrix rho = matmul(g, adjoint(g));
  rho *= 1.0 / trace(rho).real();
  for (std::size_t i = 0; i < dim; ++i) rho(i, i) = rho(i, i).real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix sample_state_at(const EnsembleSpec& spec, std::size_t dim, std::uint64_t index) {
  if (spec.kind == EnsembleKind::haar_pure) return pure_to_density(sample_pure_at(spec, dim, index));
  return sample_density_at(spec, dim, index);
}

std::vector<PureState> sample_pure(const EnsembleSpec& spec, std::size_t dim) {
  spec.validate(dim);
  std::vector<PureState> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) out.push_back(sample_pure_at(spec, dim, k));
  return out;
}

std::vector<DensityMatrix> sample_density(const EnsembleSpec& spec, std::size_t dim) {
  spec.validate(dim);
  std::vector<DensityMatrix> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) out.push_back(sample_density_at(spec, dim, k));
  return out;
}

CanonicalThreeQubit sample_canonical_at(std::uint64_t seed, std::uint64_t index, ThetaMode mode) {
  auto gen = substream(seed, index);
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 5> weights{};
  double total = 0.0;
  for (auto& w : weights) {
    w = expo(gen);
    total += w;
  }
  CanonicalThreeQubit p;
  for (std::size_t i = 0; i < 5; ++i) p.lambda[i] = std::sqrt(weights[i] / total);
  if (mode == ThetaMode::uniform) {
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    p.theta = angle(gen);
  }
  return p;
}

std::vector<CanonicalThreeQubit> sample_canonical(std::uint64_t seed, std::size_t count,
                                                  ThetaMode mode) {
  if (count < 1) throw PreconditionError("sample count must be at least 1");
  std::vector<CanonicalThreeQubit> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = sample_canonical_at(seed, k, mode);
  return out;
}

std::string density_to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dim"] = rho.dim();
  std::vector<double> re;
  std::vector<double> im;
  for (const auto& z : rho.matrix().entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

DensityMatrix density_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidStateError(std::string("malformed density-matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
    throw InvalidStateError("density-matrix JSON needs fields dim, re, im");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw InvalidStateError("density-matrix JSON: dim must be a positive integer");
  }
  const auto dim = j["dim"].get<std::size_t>();
  const auto read_array = [&](const char* key) {
    const auto& arr = j[key];
    if (!arr.is_array() || arr.size() != dim * dim) {
      throw InvalidStateError(std::string("density-matrix JSON: ") + key + " must hold dim^2 = " +
                              std::to_string(dim * dim) + " numbers");
    }
    std::vector<double> out;
    for (const auto& v : arr) {
      if (!v.is_number()) throw InvalidStateError(std::string("density-matrix JSON: non-number in ") + key);
      out.push_back(v.get<double>());
    }
    return out;
  };
  const auto re = read_array("re");
  const auto im = read_array("im");
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = Complex(re[i], im[i]);
  try {
    return DensityMatrix(ComplexMatrix(dim, dim, std::move(entries)));
  } catch (const DimensionError& e) {
    throw InvalidStateError(e.what());
  }
}

void write_density_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << density_to_json(rho) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

DensityMatrix read_density_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return density_from_json(buf.str());
}

}  // namespace cohq
