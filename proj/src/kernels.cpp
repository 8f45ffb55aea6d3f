#include "cohq/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cohq {

namespace {

std::atomic<int> g_workers{0};

int default_workers() {
  if (const char* env = std::getenv(threads_env_var)) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

constexpr std::size_t kTwoQubitDim = 4;

}  // namespace

int worker_count() {
  const int n = g_workers.load();
  return n > 0 ? n : default_workers();
}

void set_worker_count(int workers) { g_workers.store(workers > 0 ? workers : 0); }

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution ex) {
  if (ex == Execution::serial) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }

  std::mutex failure_mutex;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(count);

#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      body(idx);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (idx < failed_index) {
        failed_index = idx;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<SampleRecord> theorem1_samples(const EnsembleSpec& spec, Execution ex) {
  spec.validate(kTwoQubitDim);
  return map_indexed<SampleRecord>(
      spec.count,
      [&](std::size_t k) {
        const auto rho = sample_state_at(spec, kTwoQubitDim, k);
        return SampleRecord{spec.seed, spec.kind, k, concurrence(rho), l1_coherence(rho)};
      },
      ex);
}

SampleSummary summarize(const std::vector<SampleRecord>& records) {
  SampleSummary s;
  s.count = records.size();
  s.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    const double margin = r.l1_coherence - r.concurrence;
    if (r.l1_coherence + theorem_tol < r.concurrence) ++s.violations;
    if (margin < s.min_margin) {
      s.min_margin = margin;
      s.min_margin_index = r.index;
    }
  }
  if (records.empty()) s.min_margin = 0.0;
  return s;
}

ChainAudit theorem1_chain_audit(const EnsembleSpec& spec, Execution ex) {
  spec.validate(kTwoQubitDim);
  using Margins = std::array<std::pair<double, bool>, chain_link_names.size()>;
  const auto per_sample = map_indexed<Margins>(
      spec.count,
      [&](std::size_t k) {
        const auto report = theorem1_chain(sample_state_at(spec, kTwoQubitDim, k));
        Margins m{};
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = {report.links[i].margin, report.links[i].holds};
        return m;
      },
      ex);

  ChainAudit audit;
  audit.count = spec.count;
  for (auto& l : audit.links) l.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < per_sample.size(); ++k) {
    for (std::size_t i = 0; i < audit.links.size(); ++i) {
      auto& link = audit.links[i];
      const auto [margin, holds] = per_sample[k][i];
      if (!holds) ++link.violations;
      if (margin < link.worst_margin) {
        link.worst_margin = margin;
        link.worst_index = k;
      }
    }
  }
  return audit;
}

std::vector<AppendixSample> appendix_samples(const EnsembleSpec& spec, Execution ex) {
  spec.validate(kTwoQubitDim);
  return map_indexed<AppendixSample>(
      spec.count,
      [&](std::size_t k) {
        const auto rho = sample_state_at(spec, kTwoQubitDim, k);
        return AppendixSample{induced_one_norm(rho.matrix()), l1_coherence(rho), concurrence(rho)};
      },
      ex);
}

std::vector<CanonicalSample> canonical_samples(std::uint64_t seed, std::size_t count,
                                               ThetaMode mode, Execution ex) {
  return map_indexed<CanonicalSample>(
      count,
      [&](std::size_t k) {
        CanonicalSample s;
        s.params = sample_canonical_at(seed, k, mode);
        s.numeric = canonical_measures_numeric(s.params);
        if (mode == ThetaMode::zero) s.analytic = canonical_measures_analytic(s.params);
        s.tangle_analytic = tangle_analytic(s.params);
        s.ckw_residual = ckw_residual(canonical_state(s.params));
        return s;
      },
      ex);
}

}  // namespace cohq
