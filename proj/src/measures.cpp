#include "cohq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cohq/errors.hpp"

namespace cohq {

namespace {

constexpr double kLinkTol = 1e-12;
constexpr double kFamilyTol = 1e-12;

const ComplexMatrix& sigma_yy() {
  static const ComplexMatrix yy = kron(pauli().sigma_y, pauli().sigma_y);
  return yy;
}

ComplexMatrix flip(const ComplexMatrix& m) {
  return matmul(matmul(sigma_yy(), conjugate(m)), sigma_yy());
}

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4) {
    throw DimensionError(std::string(what) + " needs a two-qubit (4x4) state, got dimension " +
                         std::to_string(rho.dim()));
  }
}

void require_theta_zero(const CanonicalThreeQubit& p, const char* what) {
  p.validate();
  if (p.theta > kFamilyTol) {
    throw PreconditionError(std::string(what) + ": closed form holds only for theta = 0 (got " +
                            std::to_string(p.theta) + ")");
  }
}

ChainLink link(const char* name, double lhs, double rhs, double tol = kLinkTol) {
  const double margin = rhs - lhs;
  return {name, lhs, rhs, margin, margin >= -tol};
}

double two_sqrt_det(const DensityMatrix& rho_a) {
  const double det = (rho_a(0, 0).real() * rho_a(1, 1).real()) - std::norm(rho_a(0, 1));
  return std::clamp(2.0 * std::sqrt(std::max(det, 0.0)), 0.0, 1.0);
}

double clamp_tangle(double t) {
  if (t < -tangle_clamp) {
    std::ostringstream msg;
    msg << "tangle residual " << t << " is below -" << tangle_clamp;
    throw NumericalError(msg.str());
  }
  return std::max(t, 0.0);
}

}  // namespace

double l1_coherence(const DensityMatrix& rho) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (i != j) sum += std::abs(rho(i, j));
    }
  }
  return sum;
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  require_two_qubit(rho, "spin_flip");
  return flip(rho.matrix());
}

std::array<double, 4> wootters_roots(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  // sqrt(rho~) is the spin flip of sqrt(rho): the flip is an antiunitary
  // conjugation, which commutes with the principal square root.
  const auto sv = singular_values(matmul(root, flip(root)));
  return {sv[0], sv[1], sv[2], sv[3]};
}

double concurrence(const DensityMatrix& rho) {
  const auto r = wootters_roots(rho);
  return std::clamp(r[0] - r[1] - r[2] - r[3], 0.0, 1.0);
}

MeasureReport measure(const DensityMatrix& rho) {
  return {l1_coherence(rho), concurrence(rho), rho.purity()};
}

TheoremChainReport theorem1_chain(const DensityMatrix& rho) {
  require_two_qubit(rho, "theorem1_chain");
  TheoremChainReport r{};
  const auto roots = wootters_roots(rho);
  r.concurrence = std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
  r.sqrt_lambda_max = roots[0];
  r.norms = norm_candidates(rho.matrix());
  r.smax_rho = r.norms.max_singular;
  r.smax_tilde = singular_values(spin_flip(rho)).front();
  r.smax_product = r.smax_rho * r.smax_tilde;
  r.frobenius_product = r.norms.frobenius * r.smax_tilde;
  r.trace_sq_product = r.norms.trace_of_square * r.smax_tilde;
  r.l1_coherence = l1_coherence(rho);

  const auto& n = r.norms;
  r.links = {
      link(chain_link_names[0], r.concurrence, r.sqrt_lambda_max),
      link(chain_link_names[1], r.sqrt_lambda_max, r.smax_product),
      link(chain_link_names[2], r.smax_rho, n.trace_of_square),
      link(chain_link_names[3], r.smax_rho, n.frobenius),
      link(chain_link_names[4], n.trace_of_square, n.trace_norm),
      link(chain_link_names[5], n.frobenius, n.trace_norm),
      link(chain_link_names[6], n.trace_norm, r.l1_coherence),
      link(chain_link_names[7], n.induced_one, r.l1_coherence),
      link(chain_link_names[8], r.smax_tilde, 1.0),
      link(chain_link_names[9], r.concurrence, r.l1_coherence, theorem_tol),
  };
  return r;
}

PartialConcurrences partial_concurrences_analytic(const CanonicalThreeQubit& p) {
  require_theta_zero(p, "partial_concurrences_analytic");
  const auto& l = p.lambda;
  return {2.0 * l[0] * l[3], 2.0 * l[0] * l[2]};
}

ReducedCoherences reduced_coherences_analytic(const CanonicalThreeQubit& p) {
  require_theta_zero(p, "reduced_coherences_analytic");
  const auto& l = p.lambda;
  return {
      2.0 * (l[0] * l[1] + l[0] * l[3] + l[1] * l[3] + l[2] * l[4]),
      2.0 * (l[0] * l[1] + l[0] * l[2] + l[1] * l[2] + l[3] * l[4]),
      2.0 * l[0] * l[1],
  };
}

double bipartition_concurrence(const PureState& psi) {
  if (psi.dim() != 8) throw DimensionError("bipartition_concurrence needs a three-qubit state");
  return two_sqrt_det(reduce_three_qubit(pure_to_density(psi), {0}));
}

double ckw_residual(const PureState& psi) {
  if (psi.dim() != 8) throw DimensionError("ckw_residual needs a three-qubit state");
  const auto rho = pure_to_density(psi);
  const double c_a_bc = two_sqrt_det(reduce_three_qubit(rho, {0}));
  const double c_ab = concurrence(reduce_three_qubit(rho, {0, 1}));
  const double c_ac = concurrence(reduce_three_qubit(rho, {0, 2}));
  return c_a_bc * c_a_bc - c_ab * c_ab - c_ac * c_ac;
}

double tangle_residual(const PureState& psi) { return clamp_tangle(ckw_residual(psi)); }

double tangle_analytic(const CanonicalThreeQubit& p) {
  p.validate();
  const double x = p.lambda[0] * p.lambda[4];
  return 4.0 * x * x;
}

CanonicalMeasures canonical_measures_analytic(const CanonicalThreeQubit& p) {
  const auto c = partial_concurrences_analytic(p);
  const auto coh = reduced_coherences_analytic(p);
  return {c.c_ab, c.c_ac, coh.coh_ab, coh.coh_ac, coh.coh_a, tangle_analytic(p)};
}

CanonicalMeasures canonical_measures_numeric(const CanonicalThreeQubit& p) {
  const auto rho = pure_to_density(canonical_state(p));
  const auto rho_ab = reduce_three_qubit(rho, {0, 1});
  const auto rho_ac = reduce_three_qubit(rho, {0, 2});
  const auto rho_a = reduce_three_qubit(rho, {0});
  CanonicalMeasures m{};
  m.c_ab = concurrence(rho_ab);
  m.c_ac = concurrence(rho_ac);
  m.coh_ab = l1_coherence(rho_ab);
  m.coh_ac = l1_coherence(rho_ac);
  m.coh_a = l1_coherence(rho_a);
  const double c_a_bc = two_sqrt_det(rho_a);
  m.tangle = clamp_tangle(c_a_bc * c_a_bc - m.c_ab * m.c_ab - m.c_ac * m.c_ac);
  return m;
}

}  // namespace cohq
