#pragma once

// Coherence, concurrence and tangle evaluators. Each quantity has a general
// matrix route; the canonical three-qubit family additionally has closed
// forms so the two can be checked against each other.

#include <array>
#include <string>
#include <vector>

#include "cohq/linalg.hpp"
#include "cohq/states.hpp"

namespace cohq {

/// Tolerance of the end-to-end C <= C_l1 check.
inline constexpr double theorem_tol = 1e-9;
/// Band separating rounding noise from genuine negative tangle / CKW residuals.
inline constexpr double tangle_clamp = 1e-8;

struct MeasureReport {
  double l1_coherence;
  double concurrence;
  double purity;
};

/// Sum of |rho_ij| over all ordered pairs i != j.
double l1_coherence(const DensityMatrix& rho);

/// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y); two-qubit states only.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// sqrt of the eigenvalues of rho * rho~, descending. They are obtained as
/// the singular values of sqrt(rho) * sqrt(rho~), whose squares are the
/// eigenvalues of the Hermitian matrix sqrt(rho) rho~ sqrt(rho).
std::array<double, 4> wootters_roots(const DensityMatrix& rho);

/// Wootters concurrence max(0, r1 - r2 - r3 - r4).
double concurrence(const DensityMatrix& rho);

MeasureReport measure(const DensityMatrix& rho);

// --- Proof-chain evaluation ------------------------------------------------

struct ChainLink {
  std::string name;
  double lhs;
  double rhs;
  double margin;  // rhs - lhs
  bool holds;
};

/// Stable link identifiers, in report order.
inline constexpr std::array<const char*, 10> chain_link_names = {
    "concurrence<=sqrt_lambda_max",
    "sqrt_lambda_max<=smax_rho*smax_tilde",
    "smax_rho<=trace_of_square",
    "smax_rho<=frobenius",
    "trace_of_square<=trace_norm",
    "frobenius<=trace_norm",
    "trace_norm<=l1_coherence",
    "induced_one<=l1_coherence",
    "smax_tilde<=1",
    "concurrence<=l1_coherence",
};

struct TheoremChainReport {
  double concurrence;
  double sqrt_lambda_max;
  double smax_rho;
  double smax_tilde;
  double smax_product;
  double frobenius_product;
  double trace_sq_product;
  NormCandidates norms;  // every reading of ||rho||_1 and ||rho||_2
  double l1_coherence;
  std::vector<ChainLink> links;  // ordered as chain_link_names

  const ChainLink& end_to_end() const { return links.back(); }
};

/// Evaluates every quantity in the C <= C_l1 argument. Intermediate links
/// are reported with margins; only the last one is the claim itself.
TheoremChainReport theorem1_chain(const DensityMatrix& rho);

// --- Canonical three-qubit family -------------------------------------------

struct PartialConcurrences {
  double c_ab;
  double c_ac;
};

struct ReducedCoherences {
  double coh_ab;
  double coh_ac;
  double coh_a;
};

struct CanonicalMeasures {
  double c_ab;
  double c_ac;
  double coh_ab;
  double coh_ac;
  double coh_a;
  double tangle;
};

/// (2 l0 l3, 2 l0 l2). theta must be 0.
PartialConcurrences partial_concurrences_analytic(const CanonicalThreeQubit& p);

/// Closed-form l1-coherences of rho_AB, rho_AC and rho_A. theta must be 0.
ReducedCoherences reduced_coherences_analytic(const CanonicalThreeQubit& p);

/// Concurrence of A against BC for a three-qubit pure state: 2 sqrt(det rho_A).
double bipartition_concurrence(const PureState& psi);

/// C_A(BC)^2 - C_AB^2 - C_AC^2 with Wootters partial concurrences, unclamped.
double ckw_residual(const PureState& psi);

/// ckw_residual with rounding noise removed: values in [-tangle_clamp, 0)
/// clamp to 0, lower values throw NumericalError.
double tangle_residual(const PureState& psi);

/// 4 l0^2 l4^2, valid for every theta.
double tangle_analytic(const CanonicalThreeQubit& p);

/// All closed forms together (theta = 0).
CanonicalMeasures canonical_measures_analytic(const CanonicalThreeQubit& p);

/// Same quantities through the matrix route: build the state, reduce,
/// run the general evaluators. Works for any theta.
CanonicalMeasures canonical_measures_numeric(const CanonicalThreeQubit& p);

}  // namespace cohq
