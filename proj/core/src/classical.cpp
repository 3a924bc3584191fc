#include "covsep/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covsep/errors.hpp"
#include "covsep/rng.hpp"

namespace covsep {

namespace {

void require_finite(const std::vector<double>& vals, const char* what) {
  for (double v : vals)
    if (!std::isfinite(v))
      throw InvariantViolation(std::string(what) + " finite", v);
}

void require_distinct(const std::vector<double>& vals, const char* what) {
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      if (vals[i] == vals[j])
        throw InvariantViolation(std::string(what) + " pairwise distinct (" +
                                     detail::format_double(vals[i]) +
                                     " repeats)",
                                 0.0);
}

}  // namespace

JointDistribution::JointDistribution(std::vector<double> x_values,
                                     std::vector<double> y_values,
                                     std::vector<std::vector<double>> probs)
    : x_values_(std::move(x_values)), y_values_(std::move(y_values)) {
  if (x_values_.size() < 2)
    throw InvariantViolation("x_values has at least two outcomes",
                             static_cast<double>(x_values_.size()));
  if (y_values_.size() < 2)
    throw InvariantViolation("y_values has at least two outcomes",
                             static_cast<double>(y_values_.size()));
  require_finite(x_values_, "x_values");
  require_finite(y_values_, "y_values");
  require_distinct(x_values_, "x_values");
  require_distinct(y_values_, "y_values");

  const std::size_t m = x_values_.size();
  const std::size_t n = y_values_.size();
  if (probs.size() != m)
    throw InvariantViolation("probs has one row per x value",
                             static_cast<double>(probs.size()) -
                                 static_cast<double>(m));
  probs_.reserve(m * n);
  for (const auto& row : probs) {
    if (row.size() != n)
      throw InvariantViolation("probs rows have one cell per y value",
                               static_cast<double>(row.size()) -
                                   static_cast<double>(n));
    for (double p : row) {
      if (!std::isfinite(p)) throw InvariantViolation("probs finite", p);
      if (p < -kProbTol || p > 1.0 + kProbTol)
        throw InvariantViolation("probs cells within [0, 1]",
                                 p < 0.0 ? p : p - 1.0);
      probs_.push_back(p);
    }
  }

  double total = 0.0;
  for (double p : probs_) total += p;
  if (std::abs(total - 1.0) > kProbTol)
    throw InvariantViolation("probs total mass 1", total - 1.0);
}

std::vector<std::vector<double>> JointDistribution::prob_rows() const {
  std::vector<std::vector<double>> out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    out[i].assign(probs_.begin() + static_cast<std::ptrdiff_t>(i * cols()),
                  probs_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols()));
  return out;
}

BinaryParameterization::BinaryParameterization(double alpha, double u, double v,
                                               double x1, double x2, double y1,
                                               double y2)
    : alpha(alpha), u(u), v(v), x1(x1), x2(x2), y1(y1), y2(y2) {
  for (double t : {alpha, u, v, x1, x2, y1, y2})
    if (!std::isfinite(t))
      throw InvariantViolation("parameters finite", t);
  if (u < -kProbTol || u > 1.0 + kProbTol)
    throw InvariantViolation("u within [0, 1]", u < 0.0 ? u : u - 1.0);
  if (v < -kProbTol || v > 1.0 + kProbTol)
    throw InvariantViolation("v within [0, 1]", v < 0.0 ? v : v - 1.0);
  const double lo = std::max(0.0, u + v - 1.0);
  const double hi = std::min(u, v);
  if (alpha < lo - kProbTol)
    throw InvariantViolation("alpha >= max(0, u + v - 1)", alpha - lo);
  if (alpha > hi + kProbTol)
    throw InvariantViolation("alpha <= min(u, v)", alpha - hi);
  if (x1 == x2) throw InvariantViolation("x values distinct", x1);
  if (y1 == y2) throw InvariantViolation("y values distinct", y1);
}

Marginals marginals(const JointDistribution& d) {
  Marginals m;
  m.x.assign(d.rows(), 0.0);
  m.y.assign(d.cols(), 0.0);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const double p = d.prob(i, j);
      m.x[i] += p;
      m.y[j] += p;
    }
  return m;
}

Expectations expectations(const JointDistribution& d) {
  const Marginals m = marginals(d);
  Expectations e{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < d.rows(); ++i) e.ex += m.x[i] * d.x_values()[i];
  for (std::size_t j = 0; j < d.cols(); ++j) e.ey += m.y[j] * d.y_values()[j];
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      e.exy += d.prob(i, j) * d.x_values()[i] * d.y_values()[j];
  return e;
}

double covariance(const JointDistribution& d) {
  const Expectations e = expectations(d);
  return e.exy - e.ex * e.ey;
}

double independence_defect(const JointDistribution& d) {
  const Marginals m = marginals(d);
  double worst = 0.0;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      worst = std::max(worst, std::abs(d.prob(i, j) - m.x[i] * m.y[j]));
  return worst;
}

bool is_independent(const JointDistribution& d, double tol) {
  if (!(tol >= 0.0)) throw InvariantViolation("tolerance >= 0", tol);
  return independence_defect(d) <= tol;
}

JointDistribution from_parameterization(const BinaryParameterization& p) {
  return JointDistribution(
      {p.x1, p.x2}, {p.y1, p.y2},
      {{p.alpha, p.u - p.alpha},
       {p.v - p.alpha, 1.0 - p.u - p.v + p.alpha}});
}

bool verify_theorem1(const BinaryParameterization& p, double tol) {
  if (!(tol >= 0.0)) throw InvariantViolation("tolerance >= 0", tol);
  const JointDistribution d = from_parameterization(p);
  // Cov(X, Y) = (alpha - uv)(x1 - x2)(y1 - y2), so "zero covariance" is
  // judged at the outcome-gap scale to keep the two sides commensurate.
  const double gap = std::abs((p.x1 - p.x2) * (p.y1 - p.y2));
  const bool uncorrelated = std::abs(covariance(d)) <= tol * gap;
  const bool independent = independence_defect(d) <= tol;
  return uncorrelated == independent;
}

JointDistribution three_value_counterexample() {
  const double third = 1.0 / 3.0;
  // X uniform on {-1, 0, 1}, Y = X^2. The +-1 rows cancel in E[XY] term by
  // term, so the covariance vanishes exactly, while knowing Y pins |X|.
  return JointDistribution({-1.0, 0.0, 1.0}, {0.0, 1.0},
                           {{0.0, third}, {third, 0.0}, {0.0, third}});
}

SampleSummary sample(const JointDistribution& d, std::uint64_t count,
                     std::uint64_t seed) {
  if (count < 1)
    throw InvariantViolation("sample count >= 1", static_cast<double>(count));

  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  const std::size_t cells = m * n;

  // inverse-CDF table over the row-major cells
  std::vector<double> cdf(cells);
  double acc = 0.0;
  for (std::size_t k = 0; k < cells; ++k) {
    acc += d.prob(k / n, k % n);
    cdf[k] = acc;
  }

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> counts(cells, 0);
  for (std::uint64_t t = 0; t < count; ++t) {
    const double u = rng.next_unit();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t k =
        it == cdf.end() ? cells - 1
                        : static_cast<std::size_t>(it - cdf.begin());
    ++counts[k];
  }

  SampleSummary out;
  out.count = count;
  out.seed = seed;
  out.empirical_probs.assign(m, std::vector<double>(n, 0.0));
  const double total = static_cast<double>(count);
  double sx = 0.0, sy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double c = static_cast<double>(counts[i * n + j]);
      out.empirical_probs[i][j] = c / total;
      sx += c * d.x_values()[i];
      sy += c * d.y_values()[j];
      sxy += c * d.x_values()[i] * d.y_values()[j];
    }
  const double ex = sx / total;
  const double ey = sy / total;
  out.empirical_cov = sxy / total - ex * ey;
  return out;
}

}  // namespace covsep
