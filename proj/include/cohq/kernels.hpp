#pragma once

// Per-sample sweeps over seeded ensembles. Every kernel has a serial
// reference path and an OpenMP path; both fill a result vector by sample
// index, so their outputs are identical element for element regardless of
// the worker count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

#include "cohq/measures.hpp"
#include "cohq/states.hpp"

namespace cohq {

enum class Execution { serial, parallel };

/// Environment variable that overrides the default worker count.
inline constexpr const char* threads_env_var = "COHQ_THREADS";

/// Worker count used by Execution::parallel: the last value passed to
/// set_worker_count, else COHQ_THREADS, else the OpenMP default.
int worker_count();
void set_worker_count(int workers);  // <= 0 restores the default

/// Runs body(k) for k in [0, count). With Execution::parallel the indices
/// are spread over worker_count() threads. If any call throws, the
/// exception from the lowest failing index is rethrown after the sweep.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution ex);

template <class Result, class Fn>
std::vector<Result> map_indexed(std::size_t count, Fn&& fn, Execution ex) {
  std::vector<Result> out(count);
  for_each_index(count, [&](std::size_t k) { out[k] = fn(k); }, ex);
  return out;
}

// --- Two-qubit ensemble sweeps ---------------------------------------------

struct SampleRecord {
  std::uint64_t seed = 0;
  EnsembleKind ensemble = EnsembleKind::haar_pure;
  std::uint64_t index = 0;
  double concurrence = 0.0;
  double l1_coherence = 0.0;
};

/// (C, C_l1) for every state of a two-qubit ensemble.
std::vector<SampleRecord> theorem1_samples(const EnsembleSpec& spec, Execution ex);

struct SampleSummary {
  std::size_t count = 0;
  std::size_t violations = 0;  // C_l1 + theorem_tol < C
  double min_margin = 0.0;     // min over samples of C_l1 - C
  std::uint64_t min_margin_index = 0;
};

SampleSummary summarize(const std::vector<SampleRecord>& records);

struct ChainLinkSummary {
  std::size_t violations = 0;
  double worst_margin = 0.0;
  std::uint64_t worst_index = 0;
};

struct ChainAudit {
  std::size_t count = 0;
  std::array<ChainLinkSummary, chain_link_names.size()> links{};

  const ChainLinkSummary& end_to_end() const { return links.back(); }
};

/// Runs theorem1_chain on every state and tallies per-link violations.
ChainAudit theorem1_chain_audit(const EnsembleSpec& spec, Execution ex);

struct AppendixSample {
  double induced_one = 0.0;
  double l1_coherence = 0.0;
  double concurrence = 0.0;
};

std::vector<AppendixSample> appendix_samples(const EnsembleSpec& spec, Execution ex);

// --- Canonical three-qubit sweeps ------------------------------------------

struct CanonicalSample {
  CanonicalThreeQubit params;
  CanonicalMeasures numeric{};
  std::optional<CanonicalMeasures> analytic;  // theta = 0 only
  double tangle_analytic = 0.0;
  double ckw_residual = 0.0;  // unclamped C_A(BC)^2 - C_AB^2 - C_AC^2
};

std::vector<CanonicalSample> canonical_samples(std::uint64_t seed, std::size_t count,
                                               ThetaMode mode, Execution ex);

}  // namespace cohq
