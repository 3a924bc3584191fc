#include "covsep/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covsep/errors.hpp"

namespace covsep {

namespace {

void require_finite(const Mat2& m, const char* what) {
  for (const Complex& c : m.e)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InvariantViolation(std::string(what) + " entries finite",
                               std::abs(c));
}

// Four-dimensional pair space: |i>|j> flattened to index 2*i + j.
using Vec4 = std::array<Complex, 4>;
using Mat4 = std::array<Complex, 16>;

Vec4 flatten(const Mat2& gamma) {
  return {gamma(0, 0), gamma(0, 1), gamma(1, 0), gamma(1, 1)};
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          m[static_cast<std::size_t>((2 * i + j) * 4 + (2 * k + l))] =
              a(i, k) * b(j, l);
  return m;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex acc(0.0);
      for (int k = 0; k < 4; ++k)
        acc += a[static_cast<std::size_t>(i * 4 + k)] *
               b[static_cast<std::size_t>(k * 4 + j)];
      m[static_cast<std::size_t>(i * 4 + j)] = acc;
    }
  return m;
}

// psi^dagger op psi
Complex quadratic_form(const Vec4& psi, const Mat4& op) {
  Complex acc(0.0);
  for (int r = 0; r < 4; ++r) {
    Complex row(0.0);
    for (int c = 0; c < 4; ++c)
      row += op[static_cast<std::size_t>(r * 4 + c)]
             * psi[static_cast<std::size_t>(c)];
    acc += std::conj(psi[static_cast<std::size_t>(r)]) * row;
  }
  return acc;
}

double real_expectation(const TwoQubitState& s, const Mat4& op, double scale) {
  const Complex v = quadratic_form(flatten(s.gamma()), op);
  if (std::abs(v.imag()) > kNumTol * scale)
    throw ConsistencyError(
        "expectation value acquired an imaginary part (" +
        detail::format_double(v.imag()) +
        "); a non-Hermitian operator slipped through");
  return v.real();
}

}  // namespace

Observable2::Observable2(const Mat2& entries) : entries_(entries) {
  require_finite(entries_, "observable");
  const double skew = std::abs(entries_(1, 0) - std::conj(entries_(0, 1)));
  if (skew > kNumTol)
    throw InvariantViolation(
        "observable Hermitian: entry(1,0) == conj(entry(0,1))", skew);
  const double diag_imag = std::max(std::abs(entries_(0, 0).imag()),
                                    std::abs(entries_(1, 1).imag()));
  if (diag_imag > kNumTol)
    throw InvariantViolation("observable Hermitian: real diagonal", diag_imag);
  // Symmetrize exactly so downstream algebra never sees a residual skew part.
  entries_(0, 0) = Complex(entries_(0, 0).real(), 0.0);
  entries_(1, 1) = Complex(entries_(1, 1).real(), 0.0);
  entries_(1, 0) = std::conj(entries_(0, 1));
}

TwoQubitState::TwoQubitState(const Mat2& gamma) : gamma_(gamma) {
  require_finite(gamma_, "state");
  double norm2 = 0.0;
  for (const Complex& c : gamma_.e) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > kNumTol)
    throw InvariantViolation("state normalization: sum |gamma_ij|^2 == 1",
                             norm2 - 1.0);
}

TwoQubitState bell_state() {
  const double s = std::sqrt(0.5);
  Mat2 g;
  g(0, 0) = s;
  g(1, 1) = s;
  return TwoQubitState(g);
}

TwoQubitState product_state(const QubitVector& a, const QubitVector& b) {
  const double na = std::norm(a[0]) + std::norm(a[1]);
  if (std::abs(na - 1.0) > kNumTol)
    throw InvariantViolation("left factor normalization", na - 1.0);
  const double nb = std::norm(b[0]) + std::norm(b[1]);
  if (std::abs(nb - 1.0) > kNumTol)
    throw InvariantViolation("right factor normalization", nb - 1.0);
  // Divide out the residual factor norms so the product is exactly unit.
  const double inv = 1.0 / std::sqrt(na * nb);
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      g(i, j) = inv * (a[static_cast<std::size_t>(i)] *
                       b[static_cast<std::size_t>(j)]);
  return TwoQubitState(g);
}

double expectation_x(const TwoQubitState& s, const Observable2& q) {
  const double scale = std::max(1.0, q.frobenius());
  return real_expectation(s, kron(q.entries(), Mat2::identity()), scale);
}

double expectation_y(const TwoQubitState& s, const Observable2& r) {
  const double scale = std::max(1.0, r.frobenius());
  return real_expectation(s, kron(Mat2::identity(), r.entries()), scale);
}

double expectation_xy(const TwoQubitState& s, const Observable2& q,
                      const Observable2& r) {
  const Mat4 op = matmul(kron(q.entries(), Mat2::identity()),
                         kron(Mat2::identity(), r.entries()));
  const double scale = std::max(1.0, q.frobenius() * r.frobenius());
  return real_expectation(s, op, scale);
}

double quantum_covariance(const TwoQubitState& s, const Observable2& q,
                          const Observable2& r) {
  return expectation_xy(s, q, r) - expectation_x(s, q) * expectation_y(s, r);
}

SchmidtCoefficients schmidt_coefficients(const TwoQubitState& s) {
  const double absdet = std::abs(det(s.gamma()));
  // gamma gamma^dagger has unit trace, so its eigenvalues are
  // 1/2 +- sqrt(1/4 - |det gamma|^2). sigma2 comes from the exact product
  // identity sigma1 * sigma2 = |det gamma|, which stays fully accurate for
  // near-product states where the subtraction route would cancel.
  const double disc = std::max(0.0, 0.25 - absdet * absdet);
  const double lam1 = 0.5 + std::sqrt(disc);
  const double s1 = std::sqrt(lam1);
  const double s2 = absdet / s1;
  return {s1, s2};
}

bool is_separable(const TwoQubitState& s, double tol) {
  if (!(tol >= 0.0)) throw InvariantViolation("tolerance >= 0", tol);
  const SchmidtCoefficients sc = schmidt_coefficients(s);
  const double absdet = std::abs(det(s.gamma()));
  const bool by_sigma = sc.sigma2 <= tol;
  const bool by_det = absdet <= tol * sc.sigma1;
  if (by_sigma != by_det)
    throw ConsistencyError(
        "separability tests disagree: sigma2 = " +
        detail::format_double(sc.sigma2) + " vs |det gamma| = " +
        detail::format_double(absdet) + " at tolerance " +
        detail::format_double(tol));
  return by_sigma;
}

SpectralDecomposition2 spectral_decomposition(const Observable2& q) {
  const double a = q.entry(0, 0).real();
  const double d = q.entry(1, 1).real();
  const Complex b = q.entry(0, 1);

  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  const double lam1 = mean + radius;
  const double lam2 = mean - radius;

  SpectralDecomposition2 out;
  out.eigenvalues = {lam1, lam2};
  const double gap = lam1 - lam2;
  if (gap <= kDegenGapFactor * std::max(1.0, std::abs(lam1) + std::abs(lam2))) {
    // Near-multiple of the identity: no meaningful eigenbasis.
    out.projectors = {Mat2::identity(), Mat2{}};
    out.degenerate = true;
    return out;
  }

  // P1 = (q - lam2 I) / (lam1 - lam2); the complement is formed exactly so
  // P1 + P2 == I bitwise.
  Mat2 shifted = q.entries();
  shifted(0, 0) -= lam2;
  shifted(1, 1) -= lam2;
  const Mat2 p1 = Complex(1.0 / gap, 0.0) * shifted;
  out.projectors = {p1, Mat2::identity() - p1};
  out.degenerate = false;
  return out;
}

}  // namespace covsep
