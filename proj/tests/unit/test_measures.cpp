#include "cohq/measures.hpp"

#include <algorithm>
#include <cmath>

#include "cohq/errors.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace cohq;
using cohq::testing::bell_state;
using cohq::testing::params;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

DensityMatrix werner(double p) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= Complex((1.0 - p) / 4.0);
  m += Complex(p) * bell_state().matrix();
  return DensityMatrix(m);
}

const ChainLink& link(const TheoremChainReport& r, const std::string& name) {
  const auto it = std::find_if(r.links.begin(), r.links.end(), [&](const auto& l) { return l.name == name; });
  REQUIRE(it != r.links.end());
  return *it;
}

}  // namespace

TEST_CASE("l1_coherence examples") {
  CHECK(l1_coherence(DensityMatrix(ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25}))) == 0.0);
  CHECK(l1_coherence(bell_state()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(l1_coherence(werner(0.9)) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("l1_coherence depends on the basis") {
  const auto& h1 = pauli();
  ComplexMatrix hadamard = h1.sigma_x + h1.sigma_z;
  hadamard *= Complex(kInvSqrt2);
  const auto hh = kron(hadamard, h1.identity);
  const DensityMatrix rotated(matmul(matmul(hh, bell_state().matrix()), adjoint(hh)));
  CHECK(std::abs(l1_coherence(rotated) - l1_coherence(bell_state())) > 1e-6);
}

TEST_CASE("spin_flip examples") {
  CHECK(max_abs_diff(spin_flip(bell_state()), bell_state().matrix()) <= 1e-15);
  const auto mixed = ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25});
  CHECK(max_abs_diff(spin_flip(DensityMatrix(mixed)), mixed) <= 1e-15);
  CHECK(max_abs_diff(spin_flip(DensityMatrix(ComplexMatrix::diagonal({1, 0, 0, 0}))),
                     ComplexMatrix::diagonal({0, 0, 0, 1})) <= 1e-15);
  CHECK_THROWS_AS(spin_flip(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5}))), DimensionError);
}

TEST_CASE("concurrence examples") {
  CHECK(concurrence(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(werner(0.9)) == doctest::Approx(0.85).epsilon(1e-12));
  CHECK(concurrence(werner(1.0 / 3.0)) <= 1e-12);
  CHECK_THROWS_AS(concurrence(DensityMatrix(Complex(0.125) * ComplexMatrix::identity(8))), DimensionError);

  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = cohq::testing::random_matrix(gen, 2, 1);
    const auto b = cohq::testing::random_matrix(gen, 2, 1);
    std::vector<Complex> amps(4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) amps[2 * i + j] = a(i, 0) * b(j, 0);
    }
    CHECK(concurrence(pure_to_density(PureState::normalized(amps))) <= 1e-12);
  }
}

TEST_CASE("concurrence agrees with the non-Hermitian oracle") {
  double worst = 0.0;
  for (const auto kind : {EnsembleKind::haar_pure, EnsembleKind::ginibre}) {
    for (std::size_t rank : {1, 2, 4}) {
      const EnsembleSpec spec{kind, rank, 100 + rank, 2000};
      for (std::size_t k = 0; k < spec.count; ++k) {
        const auto rho = sample_state_at(spec, 4, k);
        worst = std::max(worst, std::abs(concurrence(rho) - oracle::concurrence(rho.matrix())));
      }
      if (kind == EnsembleKind::haar_pure) break;
    }
  }
  CHECK(worst <= 1e-7);
}

TEST_CASE("concurrence of pure states equals 2|ad - bc|") {
  const EnsembleSpec spec{EnsembleKind::haar_pure, 1, 8, 5000};
  double worst = 0.0;
  for (const auto& psi : sample_pure(spec, 4)) {
    const double exact = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    worst = std::max(worst, std::abs(concurrence(pure_to_density(psi)) - exact));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("measure report stays in range") {
  for (const auto& rho : sample_density({EnsembleKind::ginibre, 2, 5, 2000}, 4)) {
    const auto m = measure(rho);
    CHECK(m.l1_coherence >= 0.0);
    CHECK(m.concurrence >= 0.0);
    CHECK(m.concurrence <= 1.0 + 1e-10);
    CHECK(m.purity <= 1.0 + 1e-12);
  }
}

TEST_CASE("theorem1_chain examples") {
  const auto bell = theorem1_chain(bell_state());
  CHECK(bell.concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bell.l1_coherence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(bell.end_to_end().margin) <= 1e-12);
  CHECK(bell.end_to_end().holds);
  CHECK(bell.links.size() == chain_link_names.size());
  for (std::size_t i = 0; i < bell.links.size(); ++i) CHECK(bell.links[i].name == chain_link_names[i]);

  const auto diag = theorem1_chain(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.25, 0.25, 0})));
  const auto& literal = link(diag, "smax_rho<=trace_of_square");
  CHECK_FALSE(literal.holds);
  CHECK(literal.lhs == doctest::Approx(0.5));
  CHECK(literal.rhs == doctest::Approx(0.375));
  const auto& frob = link(diag, "smax_rho<=frobenius");
  CHECK(frob.holds);
  CHECK(frob.rhs == doctest::Approx(std::sqrt(0.375)));

  const auto mixed = theorem1_chain(DensityMatrix(ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25})));
  CHECK(mixed.concurrence == 0.0);
  CHECK(mixed.l1_coherence == 0.0);
  CHECK(mixed.end_to_end().margin == 0.0);
  CHECK(mixed.end_to_end().holds);
}

TEST_CASE("concurrence never exceeds l1-coherence on sampled states") {
  for (const auto kind : {EnsembleKind::haar_pure, EnsembleKind::ginibre}) {
    const EnsembleSpec spec{kind, 4, 31, 20000};
    std::size_t violations = 0;
    for (std::size_t k = 0; k < spec.count; ++k) {
      const auto rho = sample_state_at(spec, 4, k);
      if (concurrence(rho) > l1_coherence(rho) + theorem_tol) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("partial concurrences and reduced coherences in closed form") {
  const auto w = params(kInvSqrt3, 0, kInvSqrt3, kInvSqrt3, 0);
  const auto cw = partial_concurrences_analytic(w);
  CHECK(cw.c_ab == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(cw.c_ac == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const auto ghz = params(kInvSqrt2, 0, 0, 0, kInvSqrt2);
  CHECK(partial_concurrences_analytic(ghz).c_ab == 0.0);
  const auto rg = reduced_coherences_analytic(ghz);
  CHECK(rg.coh_ab == 0.0);
  CHECK(rg.coh_ac == 0.0);
  CHECK(rg.coh_a == 0.0);

  const auto p = params(0.6, 0.2, 0.3, 0.5, std::sqrt(0.26));
  const auto cp = partial_concurrences_analytic(p);
  CHECK(std::abs(cp.c_ab - 0.6) <= 1e-15);
  CHECK(std::abs(cp.c_ac - 0.36) <= 1e-15);
  const auto rp = reduced_coherences_analytic(p);
  CHECK(std::abs(rp.coh_ab - 1.345941) <= 1e-6);
  CHECK(std::abs(rp.coh_ac - 1.229902) <= 1e-6);
  CHECK(std::abs(rp.coh_a - 0.24) <= 1e-12);

  const auto q = params(0.3, 0.2, 0.25, 0.35, std::sqrt(0.685));
  const auto rq = reduced_coherences_analytic(q);
  CHECK(std::abs(rq.coh_ab - 0.883824) <= 1e-6);
  CHECK(std::abs(rq.coh_ac - 0.949353) <= 1e-6);
  CHECK(std::abs(rq.coh_a - 0.12) <= 1e-12);

  const auto phased = params(0.6, 0, 0, 0, 0.8, 0.3);
  CHECK_THROWS_AS(partial_concurrences_analytic(phased), PreconditionError);
  CHECK_THROWS_AS(reduced_coherences_analytic(phased), PreconditionError);
}

TEST_CASE("closed forms match the matrix route on canonical samples") {
  double worst_c = 0.0;
  double worst_coh = 0.0;
  for (const auto& p : sample_canonical(404, 10000, ThetaMode::zero)) {
    const auto a = canonical_measures_analytic(p);
    const auto n = canonical_measures_numeric(p);
    worst_c = std::max({worst_c, std::abs(a.c_ab - n.c_ab), std::abs(a.c_ac - n.c_ac)});
    worst_coh = std::max({worst_coh, std::abs(a.coh_ab - n.coh_ab), std::abs(a.coh_ac - n.coh_ac),
                          std::abs(a.coh_a - n.coh_a)});
  }
  CHECK(worst_c <= 1e-8);
  CHECK(worst_coh <= 1e-10);
}

TEST_CASE("bipartition_concurrence examples") {
  CHECK(bipartition_concurrence(canonical_state(params(1, 0, 0, 0, 0))) == 0.0);
  CHECK(bipartition_concurrence(canonical_state(params(kInvSqrt2, 0, 0, 0, kInvSqrt2))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bipartition_concurrence(canonical_state(params(kInvSqrt3, 0, kInvSqrt3, kInvSqrt3, 0))) ==
        doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
}

TEST_CASE("tangle examples") {
  const auto ghz = params(kInvSqrt2, 0, 0, 0, kInvSqrt2);
  CHECK(tangle_residual(canonical_state(ghz)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tangle_analytic(ghz) == doctest::Approx(1.0).epsilon(1e-15));

  const auto w = params(kInvSqrt3, 0, kInvSqrt3, kInvSqrt3, 0);
  CHECK(std::abs(tangle_residual(canonical_state(w))) <= 1e-8);
  CHECK(tangle_analytic(w) == 0.0);

  const auto p = params(0.6, 0.2, 0.3, 0.5, std::sqrt(0.26));
  CHECK(std::abs(tangle_residual(canonical_state(p)) - 0.3744) <= 1e-8);
  CHECK(std::abs(tangle_analytic(p) - 0.3744) <= 1e-12);
}

TEST_CASE("tangle residual matches the closed form and CKW holds for every theta") {
  double worst = 0.0;
  double lowest_ckw = 0.0;
  for (const auto& p : sample_canonical(505, 10000, ThetaMode::uniform)) {
    const auto psi = canonical_state(p);
    worst = std::max(worst, std::abs(tangle_residual(psi) - tangle_analytic(p)));
    lowest_ckw = std::min(lowest_ckw, ckw_residual(psi));
  }
  CHECK(worst <= 1e-8);
  CHECK(lowest_ckw >= -1e-8);
}

TEST_CASE("canonical measures are non-negative with tangle at most one") {
  for (const auto& p : sample_canonical(606, 2000, ThetaMode::uniform)) {
    const auto m = canonical_measures_numeric(p);
    CHECK(m.c_ab >= 0.0);
    CHECK(m.c_ac >= 0.0);
    CHECK(m.coh_ab >= 0.0);
    CHECK(m.coh_ac >= 0.0);
    CHECK(m.coh_a >= 0.0);
    CHECK(m.tangle >= 0.0);
    CHECK(m.tangle <= 1.0 + 1e-10);
  }
}
