#include "cohq/classifier.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cohq/errors.hpp"

namespace cohq {

namespace {

constexpr double kFamilyTol = 1e-12;
constexpr double kEntangledTol = 1e-10;

void require_theta_zero(const CanonicalThreeQubit& p, const char* what) {
  p.validate();
  if (p.theta > kFamilyTol) {
    throw PreconditionError(std::string(what) + " is defined for theta = 0 only");
  }
}

// Hypothesis shared by the two GHZ-class results.
void require_result_hypothesis(const CanonicalThreeQubit& p, const char* what) {
  require_theta_zero(p, what);
  const auto& l = p.lambda;
  if (l[0] <= kFamilyTol) throw PreconditionError(std::string(what) + ": requires lambda0 > 0");
  if (l[4] <= kFamilyTol) throw PreconditionError(std::string(what) + ": requires lambda4 > 0");
  const double margin = l[0] + l[1] - l[4];
  if (!(margin < -boundary_tol)) {
    std::ostringstream msg;
    msg << what << ": requires lambda0 + lambda1 - lambda4 < 0, got " << margin;
    throw PreconditionError(msg.str());
  }
}

CaseLabel label_for(bool case_one, bool difference_non_negative) {
  if (case_one) {
    return difference_non_negative ? CaseLabel::case1_w_consistent : CaseLabel::case1_ghz_witness;
  }
  return difference_non_negative ? CaseLabel::case2_ghz_witness : CaseLabel::case2_w_consistent;
}

double expectation(const ComplexMatrix& op, std::span<const Complex> psi) {
  Complex sum{};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < psi.size(); ++j) row += op(i, j) * psi[j];
    sum += std::conj(psi[i]) * row;
  }
  return sum.real();
}

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

}  // namespace

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::case1_w_consistent: return "CaseI-W-consistent";
    case CaseLabel::case1_ghz_witness: return "CaseI-GHZ-witness";
    case CaseLabel::case2_w_consistent: return "CaseII-W-consistent";
    case CaseLabel::case2_ghz_witness: return "CaseII-GHZ-witness";
    case CaseLabel::boundary: return "boundary";
  }
  return "boundary";
}

bool is_ghz_witness(CaseLabel label) {
  return label == CaseLabel::case1_ghz_witness || label == CaseLabel::case2_ghz_witness;
}

bool is_w_consistent(CaseLabel label) {
  return label == CaseLabel::case1_w_consistent || label == CaseLabel::case2_w_consistent;
}

CoherenceDifference coherence_difference(const CanonicalThreeQubit& p) {
  require_theta_zero(p, "coherence_difference");
  const auto coh = reduced_coherences_analytic(p);
  const auto& l = p.lambda;
  CoherenceDifference d{};
  d.difference = coh.coh_ab - coh.coh_ac;
  d.lambda32 = l[3] - l[2];
  d.lambda014 = l[0] + l[1] - l[4];
  d.factored = 2.0 * d.lambda32 * d.lambda014;
  d.identity_residual = std::abs(d.difference - d.factored);
  return d;
}

ClassificationReport discriminate(const CanonicalThreeQubit& p) {
  const auto diff = coherence_difference(p);
  const bool on_boundary =
      std::abs(diff.lambda32) <= boundary_tol || std::abs(diff.lambda014) <= boundary_tol;

  // The sign is read off the factored form: it equals the direct difference
  // exactly in real arithmetic and cannot be flipped by cancellation.
  const bool non_negative = on_boundary || diff.factored >= 0.0;
  const bool case_one = diff.lambda32 >= -boundary_tol;

  ClassificationReport r{};
  r.params = p;
  r.measures = canonical_measures_analytic(p);
  r.difference = diff;
  r.tie_broken_label = label_for(case_one, non_negative);
  r.case_label = on_boundary ? CaseLabel::boundary : r.tie_broken_label;
  r.tangle = r.measures.tangle;
  return r;
}

double coherence_monogamy_check(const CanonicalThreeQubit& p) {
  const auto c = reduced_coherences_analytic(p);
  return c.coh_ab * c.coh_ab + c.coh_ac * c.coh_ac - 2.0 * c.coh_a * c.coh_a;
}

Result1Check result1_check(const CanonicalThreeQubit& p) {
  require_result_hypothesis(p, "result1_check");
  const auto c = partial_concurrences_analytic(p);
  const auto coh = reduced_coherences_analytic(p);
  Result1Check r{};
  r.lhs = c.c_ab + c.c_ac;
  r.rhs = 2.0 * coh.coh_ac;
  r.holds = r.lhs < r.rhs;
  r.coh_ab = coh.coh_ab;
  r.coh_ac = coh.coh_ac;
  r.intermediate_holds = coh.coh_ab < coh.coh_ac;
  return r;
}

Result2Check result2_check(const CanonicalThreeQubit& p) {
  require_result_hypothesis(p, "result2_check");
  const auto coh = reduced_coherences_analytic(p);
  const auto& l = p.lambda;
  Result2Check r{};
  r.coh_a = coh.coh_a;
  r.coh_ac = coh.coh_ac;
  r.product_minus_square = coh.coh_ab * coh.coh_ac - coh.coh_a * coh.coh_a;
  const double s01 = l[0] + l[1];
  r.printed_expansion =
      4.0 * l[0] * l[1] * l[2] * s01 + 4.0 * l[3] * s01 * (l[0] * l[1] + l[0] * l[2] + l[1] * l[2]);
  r.expansion_mismatch = std::abs(r.product_minus_square - r.printed_expansion) > identity_tol;
  r.holds = r.coh_a < r.coh_ac;
  return r;
}

const ComplexMatrix& observable_o() {
  static const ComplexMatrix o = [] {
    const auto& x = pauli().sigma_x;
    return Complex(2.0) * kron3(x, x, x);
  }();
  return o;
}

const ComplexMatrix& observable_o1() {
  static const ComplexMatrix o1 = [] {
    const auto& s = pauli();
    return Complex(2.0) * kron3(s.sigma_x, s.sigma_z, s.sigma_z);
  }();
  return o1;
}

const ComplexMatrix& observable_o2() {
  static const ComplexMatrix o2 = [] {
    const auto& s = pauli();
    const ComplexMatrix up = s.identity + s.sigma_z;
    return Complex(0.25) * kron3(up, up, up);
  }();
  return o2;
}

ObservableTriple observables_expectations(const CanonicalThreeQubit& p) {
  const auto psi = canonical_state(p);
  ObservableTriple t{};
  t.exp_o = expectation(observable_o(), psi.amplitudes());
  t.exp_o1 = expectation(observable_o1(), psi.amplitudes());
  t.exp_o2 = expectation(observable_o2(), psi.amplitudes());
  t.witness_holds = t.exp_o > t.exp_o1 + t.exp_o2;
  if (p.theta <= kFamilyTol) {
    const auto& l = p.lambda;
    const std::array<double, 3> closed = {4.0 * l[0] * l[4], 4.0 * l[0] * l[1], 2.0 * l[0] * l[0]};
    const double residual = std::max({std::abs(t.exp_o - closed[0]), std::abs(t.exp_o1 - closed[1]),
                                      std::abs(t.exp_o2 - closed[2])});
    if (residual > identity_tol) {
      std::ostringstream msg;
      msg << "observable expectations deviate from closed forms by " << residual;
      throw NumericalError(msg.str());
    }
    t.closed_form = closed;
    t.closed_form_residual = residual;
  }
  return t;
}

ParameterWitness parameter_witness(const CanonicalThreeQubit& p) {
  p.validate();
  if (p.lambda[0] <= kFamilyTol) throw PreconditionError("parameter_witness: requires lambda0 > 0");
  const auto obs = observables_expectations(p);
  ParameterWitness w{};
  w.lambda_margin = p.lambda[0] + p.lambda[1] - p.lambda[4];
  w.hypothesis = w.lambda_margin < 0.0;
  w.witness_holds = obs.witness_holds;
  w.implication_ok = !w.hypothesis || w.witness_holds;
  return w;
}

std::string_view to_string(AuditReading reading) {
  return reading == AuditReading::eq1_convention ? "eq1-convention" : "appendix-factor2";
}

std::pair<AuditRecord, AuditRecord> appendix_a_audit(const EnsembleSpec& ensemble, Execution ex) {
  const auto samples = appendix_samples(ensemble, ex);

  auto tally = [&](AuditReading reading, double factor) {
    AuditRecord rec{};
    rec.reading = reading;
    rec.samples = samples.size();
    double worst = std::numeric_limits<double>::infinity();
    std::uint64_t worst_index = 0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& s = samples[k];
      const double margin = factor * s.l1_coherence - s.induced_one;
      const bool violated = margin < -audit_tol;
      const bool entangled = s.concurrence > kEntangledTol;
      if (entangled) ++rec.entangled_samples;
      if (violated) {
        ++rec.violations_found;
        if (entangled) ++rec.entangled_violations;
        if (margin < worst) {
          worst = margin;
          worst_index = k;
        }
      }
    }
    if (rec.violations_found > 0) {
      rec.worst_case = WorstCase{worst_index, worst, sample_state_at(ensemble, 4, worst_index), {}};
    }
    return rec;
  };

  return {tally(AuditReading::eq1_convention, 1.0), tally(AuditReading::appendix_factor2, 2.0)};
}

DensityMatrix werner_state(double p) {
  if (!(p >= -1.0 / 3.0 && p <= 1.0)) throw InvalidStateError("Werner parameter outside [-1/3, 1]");
  ComplexMatrix m = Complex((1.0 - p) / 4.0) * ComplexMatrix::identity(4);
  m(0, 0) += p / 2.0;
  m(0, 3) += p / 2.0;
  m(3, 0) += p / 2.0;
  m(3, 3) += p / 2.0;
  return DensityMatrix(std::move(m));
}

nlohmann::json to_json(const CanonicalThreeQubit& p) {
  return {{"lambda", p.lambda}, {"theta", p.theta}};
}

nlohmann::json to_json(const CanonicalMeasures& m) {
  return {{"c_ab", m.c_ab},     {"c_ac", m.c_ac},     {"coh_ab", m.coh_ab},
          {"coh_ac", m.coh_ac}, {"coh_a", m.coh_a},   {"tangle", m.tangle}};
}

nlohmann::json to_json(const ClassificationReport& r) {
  return {
      {"params", to_json(r.params)},
      {"measures", to_json(r.measures)},
      {"coherence_difference", r.difference.difference},
      {"factors",
       {{"lambda3_minus_lambda2", r.difference.lambda32},
        {"lambda0_plus_lambda1_minus_lambda4", r.difference.lambda014}}},
      {"factored_difference", r.difference.factored},
      {"identity_residual", r.difference.identity_residual},
      {"case_label", to_string(r.case_label)},
      {"tie_broken_label", to_string(r.tie_broken_label)},
      {"tangle", r.tangle},
  };
}

nlohmann::json to_json(const AuditRecord& r) {
  nlohmann::json j = {
      {"reading", to_string(r.reading)},
      {"samples", r.samples},
      {"violations_found", r.violations_found},
      {"entangled_samples", r.entangled_samples},
      {"entangled_violations", r.entangled_violations},
      {"worst_case", nullptr},
  };
  if (r.worst_case) {
    const auto& w = *r.worst_case;
    j["worst_case"] = {
        {"index", w.index},
        {"margin", w.margin},
        {"state", nlohmann::json::parse(density_to_json(w.state))},
        {"file", w.file ? nlohmann::json(*w.file) : nlohmann::json(nullptr)},
    };
  }
  return j;
}

nlohmann::json to_json(const TheoremChainReport& r) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : r.links) {
    links.push_back({{"link", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"margin", l.margin},
                     {"holds", l.holds}});
  }
  return {
      {"concurrence", r.concurrence},
      {"sqrt_lambda_max", r.sqrt_lambda_max},
      {"smax_rho", r.smax_rho},
      {"smax_tilde", r.smax_tilde},
      {"smax_product", r.smax_product},
      {"frobenius_product", r.frobenius_product},
      {"trace_sq_product", r.trace_sq_product},
      {"candidate_one_norms",
       {{"trace_norm", r.norms.trace_norm}, {"induced_one", r.norms.induced_one}}},
      {"candidate_two_norms",
       {{"trace_of_square", r.norms.trace_of_square}, {"frobenius", r.norms.frobenius}}},
      {"l1_coherence", r.l1_coherence},
      {"links", links},
  };
}

}  // namespace cohq
