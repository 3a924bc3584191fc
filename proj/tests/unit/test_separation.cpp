#include <cmath>
#include <complex>
#include <optional>

#include "doctest.h"

#include "covsep/classical.hpp"
#include "covsep/errors.hpp"
#include "covsep/io.hpp"
#include "covsep/quantum.hpp"
#include "covsep/random.hpp"
#include "covsep/rng.hpp"
#include "covsep/separation.hpp"

using covsep::Complex;
using covsep::DegenerateObservable;
using covsep::Mat2;
using covsep::Observable2;
using covsep::PartnerSeed;
using covsep::PivotSingular;
using covsep::SplitMix64;
using covsep::TwoQubitState;
using covsep::Verdict;
using covsep::ZeroCorrPivot;

namespace {

Mat2 hermitian(double d00, double d11, Complex off) {
  Mat2 m;
  m(0, 0) = d00;
  m(1, 1) = d11;
  m(0, 1) = off;
  m(1, 0) = std::conj(off);
  return m;
}

const Observable2 kRefQ{hermitian(3.0, 1.0, Complex(1.0, 0.0))};
const Observable2 kRefR{hermitian(1.0, 3.0, Complex(1.0, 0.0))};
const Observable2 kPauliZ{hermitian(1.0, -1.0, Complex(0.0))};

}  // namespace

TEST_CASE("zero-correlation residual: pinned values") {
  CHECK(std::abs(covsep::zero_corr_residual(kRefQ, kRefR)) <= 1e-12);
  CHECK(covsep::zero_corr_residual(kPauliZ, kPauliZ) ==
        doctest::Approx(1.0).epsilon(1e-13));

  SplitMix64 rng(5);
  const Observable2 eye{Mat2::identity()};
  for (int t = 0; t < 50; ++t) {
    const Observable2 r = covsep::random_observable(rng);
    CHECK(std::abs(covsep::zero_corr_residual(eye, r)) <= 1e-14);
  }
}

TEST_CASE("zero-correlation residual matches its bilinear reduction") {
  SplitMix64 rng(0xFEED);
  for (int t = 0; t < 10000; ++t) {
    const Observable2 q = covsep::random_observable(rng);
    const Observable2 r = covsep::random_observable(rng);
    const double reduced =
        0.25 * (q.entry(0, 0).real() - q.entry(1, 1).real()) *
            (r.entry(0, 0).real() - r.entry(1, 1).real()) +
        q.entry(0, 1).real() * r.entry(0, 1).real() -
        q.entry(0, 1).imag() * r.entry(0, 1).imag();
    const double scale = std::max(1.0, q.frobenius() * r.frobenius());
    CHECK(std::abs(covsep::zero_corr_residual(q, r) - reduced) <=
          1e-12 * scale);
  }
}

TEST_CASE("solve_partner reproduces the reference partner observable") {
  PartnerSeed seed;
  seed.r11 = 1.0;
  seed.r22 = 3.0;
  seed.im_r12 = 0.0;
  const covsep::PartnerSolution sol =
      covsep::solve_partner(kRefQ, seed, ZeroCorrPivot::ReOffDiag);
  CHECK(sol.pivot == ZeroCorrPivot::ReOffDiag);
  CHECK_FALSE(sol.vacuous());
  // (3-1)(1-3)/4 + 1 * re = 0  =>  re = 1, recovering the reference pair
  CHECK(sol.r.entry(0, 1).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sol.r.entry(0, 1).imag() == 0.0);
  CHECK(sol.r.entry(0, 0).real() == 1.0);
  CHECK(sol.r.entry(1, 1).real() == 3.0);
}

TEST_CASE("solve_partner pivot cascade") {
  // off-diagonal q: ReOffDiag chosen automatically
  PartnerSeed seed;
  seed.r11 = 0.2;
  seed.r22 = -0.4;
  seed.im_r12 = 0.3;
  const covsep::PartnerSolution auto_sol = covsep::solve_partner(kRefQ, seed);
  CHECK(auto_sol.pivot == ZeroCorrPivot::ReOffDiag);

  // diagonal q with a gap: DiagGap; the solved gap here is zero because q
  // has no off-diagonal part, so r11 = r22 = mean of the seeds
  const Observable2 diag_q{hermitian(5.0, 1.0, Complex(0.0))};
  PartnerSeed seed2;
  seed2.r11 = 1.0;
  seed2.r22 = 3.0;
  seed2.re_r12 = 0.7;
  seed2.im_r12 = -0.2;
  const covsep::PartnerSolution diag_sol =
      covsep::solve_partner(diag_q, seed2);
  CHECK(diag_sol.pivot == ZeroCorrPivot::DiagGap);
  CHECK(diag_sol.r.entry(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(diag_sol.r.entry(1, 1).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(diag_sol.r.entry(0, 1) == Complex(0.7, -0.2));

  // purely imaginary off-diagonal, equal diagonal: ImOffDiag
  const Observable2 im_q{hermitian(0.5, 0.5, Complex(0.0, 1.0))};
  const covsep::PartnerSolution im_sol = covsep::solve_partner(im_q, seed2);
  CHECK(im_sol.pivot == ZeroCorrPivot::ImOffDiag);
  CHECK(std::abs(covsep::zero_corr_residual(im_q, im_sol.r)) <= 1e-12);

  // multiple of the identity: constraint vacuous
  const Observable2 eye{Mat2::identity()};
  const covsep::PartnerSolution vac = covsep::solve_partner(eye, seed2);
  CHECK(vac.vacuous());
  CHECK(vac.r.entry(0, 1).real() == 0.0);  // canonical representative
  CHECK(vac.r.entry(0, 1).imag() == doctest::Approx(-0.2));
  CHECK(std::abs(covsep::zero_corr_residual(eye, vac.r)) <= 1e-14);
}

TEST_CASE("solve_partner rejects singular explicit pivots") {
  const Observable2 diag_q{hermitian(1.0, 2.0, Complex(0.0))};
  PartnerSeed seed;
  try {
    covsep::solve_partner(diag_q, seed, ZeroCorrPivot::ReOffDiag);
    FAIL("expected PivotSingular");
  } catch (const PivotSingular& e) {
    CHECK(e.coefficient() == 0.0);
  }
  const Observable2 eye{Mat2::identity()};
  CHECK_THROWS_AS(covsep::solve_partner(eye, seed, ZeroCorrPivot::DiagGap),
                  PivotSingular);
  CHECK_THROWS_AS(covsep::solve_partner(eye, seed, ZeroCorrPivot::ImOffDiag),
                  PivotSingular);
}

TEST_CASE("solve_partner solutions satisfy the constraint on random draws") {
  SplitMix64 rng(321);
  for (int t = 0; t < 1000; ++t) {
    const Observable2 q = covsep::random_observable(rng);
    PartnerSeed seed;
    seed.r11 = rng.next_symmetric();
    seed.r22 = rng.next_symmetric();
    seed.re_r12 = rng.next_symmetric();
    seed.im_r12 = rng.next_symmetric();
    const covsep::PartnerSolution sol = covsep::solve_partner(q, seed);
    const double scale = std::max({1.0, q.frobenius(), sol.r.frobenius()});
    CHECK(std::abs(covsep::zero_corr_residual(q, sol.r)) <= 1e-10 * scale);
  }
}

TEST_CASE("induced table: pinned configurations") {
  const TwoQubitState bell = covsep::bell_state();

  // sigma_z on both sides: perfectly correlated half/half diagonal
  const covsep::JointDistribution dz =
      covsep::induced_joint_distribution(bell, kPauliZ, kPauliZ);
  CHECK(dz.x_values()[0] == doctest::Approx(1.0));
  CHECK(dz.x_values()[1] == doctest::Approx(-1.0));
  CHECK(dz.prob(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dz.prob(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(dz.prob(1, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(dz.prob(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(covsep::covariance(dz) == doctest::Approx(1.0).epsilon(1e-13));

  // reference pair: uniform table over the eigenvalue grid
  const covsep::JointDistribution dref =
      covsep::induced_joint_distribution(bell, kRefQ, kRefR);
  const double s2 = std::sqrt(2.0);
  CHECK(dref.x_values()[0] == doctest::Approx(2.0 + s2).epsilon(1e-14));
  CHECK(dref.x_values()[1] == doctest::Approx(2.0 - s2).epsilon(1e-14));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(dref.prob(i, j) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(covsep::independence_defect(dref) <= 1e-12);

  // product basis state with sigma_z on both sides: deterministic corner
  const TwoQubitState ground =
      covsep::product_state({Complex(1.0), Complex(0.0)},
                            {Complex(1.0), Complex(0.0)});
  const covsep::JointDistribution dg =
      covsep::induced_joint_distribution(ground, kPauliZ, kPauliZ);
  CHECK(dg.prob(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("induced table rejects degenerate observables by side") {
  const TwoQubitState bell = covsep::bell_state();
  const Observable2 eye{Mat2::identity()};
  try {
    covsep::induced_joint_distribution(bell, eye, kPauliZ);
    FAIL("expected DegenerateObservable");
  } catch (const DegenerateObservable& e) {
    CHECK(e.side() == 'A');
    CHECK(e.gap() <= 1e-9);
  }
  try {
    covsep::induced_joint_distribution(bell, kPauliZ, eye);
    FAIL("expected DegenerateObservable");
  } catch (const DegenerateObservable& e) {
    CHECK(e.side() == 'B');
  }
}

TEST_CASE("bridge identity: induced-table covariance equals operator covariance") {
  SplitMix64 rng(0xB81D6E);
  for (int t = 0; t < 1000; ++t) {
    const TwoQubitState s = (t % 3 == 0) ? covsep::bell_state()
                            : (t % 3 == 1)
                                ? covsep::random_state(rng)
                                : covsep::random_product_state(rng);
    const Observable2 q = covsep::random_nondegenerate_observable(rng);
    const Observable2 r = covsep::random_nondegenerate_observable(rng);
    const covsep::JointDistribution table =
        covsep::induced_joint_distribution(s, q, r);
    const double scale = std::max({1.0, q.frobenius(), r.frobenius()});
    CHECK(std::abs(covsep::covariance(table) -
                   covsep::quantum_covariance(s, q, r)) <= 1e-10 * scale);

    // marginal values are the eigenvalues, masses sum to one
    double mass = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) mass += table.prob(i, j);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("separation report verdicts cover all three regimes") {
  const TwoQubitState bell = covsep::bell_state();

  const covsep::SeparationReport quantum =
      covsep::build_separation_report(bell, kRefQ, kRefR, 1e-10);
  CHECK(quantum.verdict == Verdict::QuantumSeparation);
  CHECK_FALSE(quantum.separable);
  CHECK(std::abs(quantum.quantum_cov) <= 1e-10);
  CHECK(quantum.induced_independent);

  const covsep::SeparationReport correlated =
      covsep::build_separation_report(bell, kPauliZ, kPauliZ, 1e-10);
  CHECK(correlated.verdict == Verdict::Correlated);
  CHECK(correlated.quantum_cov == doctest::Approx(1.0).epsilon(1e-13));

  SplitMix64 rng(17);
  const TwoQubitState product = covsep::random_product_state(rng);
  const Observable2 q = covsep::random_nondegenerate_observable(rng);
  const Observable2 r = covsep::random_nondegenerate_observable(rng);
  const covsep::SeparationReport classical =
      covsep::build_separation_report(product, q, r, 1e-8);
  CHECK(classical.verdict == Verdict::ClassicalLike);
  CHECK(classical.separable);
  CHECK(std::abs(classical.quantum_cov) <= 1e-8);

  // the verdict invariant: QuantumSeparation iff uncorrelated and entangled
  for (const covsep::SeparationReport* rep :
       {&quantum, &correlated, &classical}) {
    const bool expect_qs =
        std::abs(rep->quantum_cov) <= rep->tol && !rep->separable;
    CHECK((rep->verdict == Verdict::QuantumSeparation) == expect_qs);
  }
}

TEST_CASE("to_string covers every verdict") {
  CHECK(std::string(covsep::to_string(Verdict::ClassicalLike)) ==
        "ClassicalLike");
  CHECK(std::string(covsep::to_string(Verdict::QuantumSeparation)) ==
        "QuantumSeparation");
  CHECK(std::string(covsep::to_string(Verdict::Correlated)) == "Correlated");
}

TEST_CASE("random instances are deterministic and always separate") {
  const covsep::SeparationInstance a = covsep::random_separation_instance(42);
  const covsep::SeparationInstance b = covsep::random_separation_instance(42);
  CHECK(a.q.entries().e == b.q.entries().e);
  CHECK(a.r.entries().e == b.r.entries().e);
  CHECK(a.report.quantum_cov == b.report.quantum_cov);
  CHECK(covsep::to_json(a.report) == covsep::to_json(b.report));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const covsep::SeparationInstance inst =
        covsep::random_separation_instance(seed);
    CHECK(inst.report.verdict == Verdict::QuantumSeparation);
    CHECK_FALSE(inst.report.separable);
    CHECK(std::abs(inst.report.quantum_cov) <= 1e-10);
    CHECK(inst.report.induced_independent);
    CHECK(inst.report.schmidt.sigma2 ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    REQUIRE(inst.report.seed.has_value());
    CHECK(*inst.report.seed == seed);
  }
}

TEST_CASE("reference configuration verifies end to end") {
  covsep::SeparationReport rep{covsep::verify_paper_counterexample()};
  CHECK(rep.verdict == Verdict::QuantumSeparation);
  CHECK(std::abs(rep.quantum_cov) <= 1e-12);
  CHECK_FALSE(rep.separable);
  CHECK(rep.induced_independent);
  CHECK(rep.schmidt.sigma1 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(rep.schmidt.sigma2 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(rep.q.entry(0, 0).real() == 3.0);
  CHECK(rep.r.entry(1, 1).real() == 3.0);
}
