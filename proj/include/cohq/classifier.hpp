#pragma once

// GHZ/W discrimination from the sign of C_l1(rho_AB) - C_l1(rho_AC), the
// GHZ-class results built on it, the observable witness, and the audit of
// the ||rho||_1 <= C_l1 bound.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cohq/kernels.hpp"
#include "cohq/measures.hpp"
#include "cohq/states.hpp"
#include "json.hpp"

namespace cohq {

/// |lambda3 - lambda2| or |lambda0 + lambda1 - lambda4| at or below this is
/// treated as zero.
inline constexpr double boundary_tol = 1e-12;
inline constexpr double identity_tol = 1e-10;

enum class CaseLabel {
  case1_w_consistent,
  case1_ghz_witness,
  case2_w_consistent,
  case2_ghz_witness,
  boundary,
};

std::string_view to_string(CaseLabel label);
bool is_ghz_witness(CaseLabel label);
bool is_w_consistent(CaseLabel label);

struct CoherenceDifference {
  double difference;        // coh_ab - coh_ac
  double lambda32;          // lambda3 - lambda2
  double lambda014;         // lambda0 + lambda1 - lambda4
  double factored;          // 2 * lambda32 * lambda014
  double identity_residual; // |difference - factored|
};

/// theta = 0 only; throws PreconditionError otherwise.
CoherenceDifference coherence_difference(const CanonicalThreeQubit& p);

struct ClassificationReport {
  CanonicalThreeQubit params;
  CanonicalMeasures measures;
  CoherenceDifference difference;
  CaseLabel case_label;
  // Label from the weak sign split (lambda3 - lambda2 >= 0 is Case I) with
  // no boundary band; equals case_label away from the boundary.
  CaseLabel tie_broken_label;
  double tangle;
};

/// Case I (lambda3 >= lambda2): difference >= 0 is W-consistent, < 0 a GHZ
/// witness. Case II: difference < 0 is W-consistent, >= 0 a GHZ witness.
/// The criterion is one-directional, so W-consistent GHZ states exist.
ClassificationReport discriminate(const CanonicalThreeQubit& p);

/// coh_ab^2 + coh_ac^2 - 2 coh_a^2 (theta = 0).
double coherence_monogamy_check(const CanonicalThreeQubit& p);

struct Result1Check {
  double lhs;  // C_AB + C_AC
  double rhs;  // 2 coh_ac
  bool holds;  // lhs < rhs
  double coh_ab;
  double coh_ac;
  bool intermediate_holds;  // coh_ab < coh_ac
};

/// Requires theta = 0, lambda0 > 0, lambda4 > 0 and lambda0 + lambda1 < lambda4.
Result1Check result1_check(const CanonicalThreeQubit& p);

struct Result2Check {
  double coh_a;
  double coh_ac;
  double product_minus_square;  // coh_ab * coh_ac - coh_a^2, direct
  // 4 l0 l1 l2 (l0 + l1) + 4 l3 (l0 + l1)(l0 l1 + l0 l2 + l1 l2), the
  // published expansion. It does not equal the direct value in general.
  double printed_expansion;
  bool expansion_mismatch;  // |direct - printed| > identity_tol
  bool holds;               // coh_a < coh_ac
};

/// Same hypothesis as result1_check.
Result2Check result2_check(const CanonicalThreeQubit& p);

struct ObservableTriple {
  double exp_o;   // <2 XXX>
  double exp_o1;  // <2 XZZ>
  double exp_o2;  // <(I+Z)^{x3} / 4>
  bool witness_holds;  // exp_o > exp_o1 + exp_o2
  // (4 l0 l4, 4 l0 l1, 2 l0^2) and the largest deviation from it; theta = 0 only.
  std::optional<std::array<double, 3>> closed_form;
  std::optional<double> closed_form_residual;
};

/// Builds O, O1, O2 with kron and evaluates <psi|.|psi> for the canonical
/// state. Works for any theta; for theta = 0 throws NumericalError if the
/// matrix values drift from the closed forms by more than identity_tol.
ObservableTriple observables_expectations(const CanonicalThreeQubit& p);

const ComplexMatrix& observable_o();
const ComplexMatrix& observable_o1();
const ComplexMatrix& observable_o2();

struct ParameterWitness {
  double lambda_margin;  // lambda0 + lambda1 - lambda4
  bool hypothesis;       // lambda_margin < 0
  bool witness_holds;
  bool implication_ok;   // !hypothesis || witness_holds
};

/// Requires lambda0 > 0.
ParameterWitness parameter_witness(const CanonicalThreeQubit& p);

// --- Appendix bound audit ---------------------------------------------------

enum class AuditReading {
  eq1_convention,   // C_l1 = ordered-pair sum
  appendix_factor2, // C_l1 = twice the ordered-pair sum
};

std::string_view to_string(AuditReading reading);

struct WorstCase {
  std::uint64_t index;
  double margin;  // C_l1 (under the reading) - ||rho||_1
  DensityMatrix state;
  std::optional<std::string> file;  // set once serialized
};

struct AuditRecord {
  AuditReading reading;
  std::size_t samples = 0;
  std::size_t violations_found = 0;
  std::size_t entangled_samples = 0;
  std::size_t entangled_violations = 0;
  std::optional<WorstCase> worst_case;  // present iff violations_found > 0
};

/// Margin tolerance for counting an audit violation.
inline constexpr double audit_tol = 1e-12;

std::pair<AuditRecord, AuditRecord> appendix_a_audit(const EnsembleSpec& ensemble,
                                                     Execution ex = Execution::parallel);

/// Werner state p|Phi+><Phi+| + (1-p) I/4.
DensityMatrix werner_state(double p);

// --- JSON -------------------------------------------------------------------

nlohmann::json to_json(const CanonicalThreeQubit& p);
nlohmann::json to_json(const CanonicalMeasures& m);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const AuditRecord& r);
nlohmann::json to_json(const TheoremChainReport& r);

}  // namespace cohq
