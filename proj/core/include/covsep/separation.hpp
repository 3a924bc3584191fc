#pragma once

#include <cstdint>
#include <optional>

#include "covsep/classical.hpp"
#include "covsep/quantum.hpp"

namespace covsep {

/// Joint classification of a (state, observable pair) configuration.
///  - ClassicalLike:       zero covariance and the state is separable; the
///                         classical equivalence applies unchanged.
///  - QuantumSeparation:   zero covariance yet the state is entangled; the
///                         classical inference from uncorrelated to
///                         independent has no quantum counterpart here.
///  - Correlated:          the covariance itself is nonzero.
enum class Verdict { ClassicalLike, QuantumSeparation, Correlated };

const char* to_string(Verdict v) noexcept;

/// Everything the analysis of one configuration produces. `induced_table`
/// is the classical two-valued joint distribution obtained by measuring the
/// observables' eigenvalues with Born-rule probabilities; by construction
/// its covariance equals quantum_cov (checked internally).
struct SeparationReport {
  double quantum_cov;
  SchmidtCoefficients schmidt;
  bool separable;
  JointDistribution induced_table;
  double induced_defect;
  bool induced_independent;
  Verdict verdict;
  Observable2 q;
  Observable2 r;
  double tol;
  std::optional<std::uint64_t> seed;  ///< set when generated from a seed
};

/// Value of the zero-correlation constraint for the maximally entangled
/// state: the covariance of (q, r) on bell_state(), evaluated through the
/// full tensor-contraction path. A root of this function in r is a partner
/// observable making the Bell-state outcomes uncorrelated.
double zero_corr_residual(const Observable2& q, const Observable2& r);

/// Which coordinate of r the partner solver eliminates. The constraint is
/// linear in (r11 - r22), Re r12 and Im r12 with coefficients
/// (q11 - q22)/4, Re q12 and -Im q12 respectively.
enum class ZeroCorrPivot { ReOffDiag, DiagGap, ImOffDiag };

/// Free coordinates of the partner observable. The pivot coordinate's value
/// is ignored and replaced by the solved one (for DiagGap the solver keeps
/// the mean (r11 + r22)/2 and re-splits the gap).
struct PartnerSeed {
  double r11 = 0.0;
  double r22 = 0.0;
  double re_r12 = 0.0;
  double im_r12 = 0.0;
};

/// Partner observable plus how it was obtained. `pivot` is empty when the
/// constraint was vacuous (q proportional to the identity): every r is then
/// uncorrelated with q on the Bell state and the seed is returned with
/// re_r12 forced to zero.
struct PartnerSolution {
  Observable2 r;
  std::optional<ZeroCorrPivot> pivot;

  bool vacuous() const noexcept { return !pivot.has_value(); }
};

/// Solve the zero-correlation constraint for one coordinate of r.
/// With an explicit pivot, a pivot coefficient of magnitude <= kNumTol
/// raises PivotSingular. Without one, pivots are tried in the order
/// ReOffDiag, DiagGap, ImOffDiag, falling through to the vacuous case.
/// The returned observable is re-verified through zero_corr_residual; a
/// residual above kNumTol * max(1, |q|_F, |r|_F) raises ConsistencyError.
PartnerSolution solve_partner(const Observable2& q, const PartnerSeed& seed,
                              std::optional<ZeroCorrPivot> pivot = std::nullopt);

/// Classical joint table induced by measuring q on the left qubit and r on
/// the right one: outcome values are the eigenvalue pairs, probabilities are
/// Born-rule weights <psi| P_i (x) Q_j |psi>. Degenerate observables are
/// rejected with DegenerateObservable (side 'A' for q, 'B' for r) because a
/// two-outcome table needs two distinct values.
JointDistribution induced_joint_distribution(const TwoQubitState& s,
                                             const Observable2& q,
                                             const Observable2& r);

/// Run the full analysis of one configuration at tolerance tol: covariance,
/// Schmidt coefficients, separability, induced table and verdict. Checks the
/// bridge identity covariance(induced_table) == quantum_cov within
/// kNumTol * max(1, |q|_F, |r|_F) and raises ConsistencyError on violation.
SeparationReport build_separation_report(const TwoQubitState& s,
                                         const Observable2& q,
                                         const Observable2& r, double tol);

/// A randomly generated zero-covariance-yet-entangled configuration on the
/// Bell state, with its full report.
struct SeparationInstance {
  Observable2 q;
  Observable2 r;
  SeparationReport report;
};

/// Deterministically generate one Bell-state instance from `seed`: draw a
/// random observable q, solve for a partner r through the ReOffDiag pivot,
/// and analyze. Draws that hit a singular pivot, a degenerate observable or
/// a numerically marginal solution are resampled; 100 consecutive rejections
/// raise GeneratorError. The resulting report always carries verdict
/// QuantumSeparation with an independent induced table.
SeparationInstance random_separation_instance(std::uint64_t seed);

/// Analyze the reference configuration: the Bell state measured with
///   q = [[3, 1], [1, 1]],   r = [[1, 1], [1, 3]].
/// Asserts the expected outcome -- zero covariance (|cov| <= 1e-12), equal
/// Schmidt coefficients 1/sqrt(2), entangled, induced table independent,
/// verdict QuantumSeparation -- and raises ConsistencyError describing the
/// first deviating quantity if any check fails.
SeparationReport verify_paper_counterexample();

}  // namespace covsep
