#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covsep/tolerances.hpp"

namespace covsep {

/// Joint probability table of two discrete real-valued random variables.
/// X indexes rows, Y indexes columns. Immutable once constructed; the
/// constructor enforces
///   - at least two outcome values per variable, all finite,
///   - outcome values pairwise distinct within each variable,
///   - a full m-by-n probability matrix with every cell in [0, 1] and total
///     mass 1, both within kProbTol.
/// Violations raise InvariantViolation naming the broken invariant.
class JointDistribution {
 public:
  JointDistribution(std::vector<double> x_values,
                    std::vector<double> y_values,
                    std::vector<std::vector<double>> probs);

  std::size_t rows() const noexcept { return x_values_.size(); }
  std::size_t cols() const noexcept { return y_values_.size(); }

  double prob(std::size_t i, std::size_t j) const {
    return probs_[i * cols() + j];
  }
  const std::vector<double>& x_values() const noexcept { return x_values_; }
  const std::vector<double>& y_values() const noexcept { return y_values_; }

  /// Probability matrix in row-major nested form, mirroring the constructor
  /// argument and the JSON wire shape.
  std::vector<std::vector<double>> prob_rows() const;

 private:
  std::vector<double> x_values_;
  std::vector<double> y_values_;
  std::vector<double> probs_;  // row-major, rows() * cols() entries
};

/// The three sliders that pin down a joint table of two two-valued variables:
/// alpha = P(X = x1, Y = y1), u = P(X = x1), v = P(Y = y1). Feasibility
/// requires max(0, u + v - 1) <= alpha <= min(u, v); the constructor rejects
/// anything outside that window (within kProbTol) and coincident outcome
/// values.
struct BinaryParameterization {
  BinaryParameterization(double alpha, double u, double v,
                         double x1, double x2, double y1, double y2);

  double alpha, u, v;
  double x1, x2, y1, y2;
};

struct Marginals {
  std::vector<double> x;
  std::vector<double> y;
};

struct Expectations {
  double ex;
  double ey;
  double exy;
};

/// Row and column sums of the table.
Marginals marginals(const JointDistribution& d);

/// E[X], E[Y] and E[XY] by direct summation over the table.
Expectations expectations(const JointDistribution& d);

/// Cov(X, Y) = E[XY] - E[X]E[Y].
double covariance(const JointDistribution& d);

/// max_ij | p_ij - p(x_i) p(y_j) |: the largest deviation of the table from
/// the product of its marginals. Zero exactly for independent variables.
double independence_defect(const JointDistribution& d);

/// True iff independence_defect(d) <= tol. Requires tol >= 0.
bool is_independent(const JointDistribution& d, double tol);

/// Expand a binary parameterization into its 2x2 joint table
///   [[alpha, u - alpha], [v - alpha, 1 - u - v + alpha]].
JointDistribution from_parameterization(const BinaryParameterization& p);

/// For two-valued variables, zero covariance and independence are the same
/// property. Returns true iff the two sides of that equivalence agree on p
/// at tolerance tol: |Cov| <= tol * |(x1-x2)(y1-y2)| exactly when
/// independence_defect <= tol. A false return indicates a defect in the
/// table machinery, not a property of p -- the equivalence is a theorem.
bool verify_theorem1(const BinaryParameterization& p, double tol);

/// Smallest classical example of zero covariance without independence:
/// X uniform on {-1, 0, 1} and Y = X^2. The covariance vanishes term by
/// term, yet the independence defect is 2/9.
JointDistribution three_value_counterexample();

/// Outcome of a Monte Carlo draw from a joint table.
struct SampleSummary {
  std::uint64_t count;      ///< number of draws
  std::uint64_t seed;       ///< seed the draws were generated from
  double empirical_cov;     ///< covariance of the empirical table
  std::vector<std::vector<double>> empirical_probs;  ///< cell counts / count
};

/// Draw `count` iid samples from d using SplitMix64(seed) and inverse-CDF
/// lookup over the row-major cells. Deterministic given (d, count, seed).
/// Requires count >= 1.
SampleSummary sample(const JointDistribution& d, std::uint64_t count,
                     std::uint64_t seed);

}  // namespace covsep
