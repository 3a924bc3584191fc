#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "covsep/tolerances.hpp"

namespace covsep {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major. Plain value type used for state
/// amplitudes, observables and projectors.
struct Mat2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int i, int j) {
    return e[static_cast<std::size_t>(2 * i + j)];
  }
  const Complex& operator()(int i, int j) const {
    return e[static_cast<std::size_t>(2 * i + j)];
  }

  static Mat2 identity() { return Mat2{{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

inline Mat2 operator*(const Complex& s, const Mat2& a) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.e[k] = s * a.e[k];
  return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

inline Mat2 adjoint(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline Mat2 transpose(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(j, i);
  return r;
}

inline Complex trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

inline Complex det(const Mat2& a) {
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

inline double frobenius_norm(const Mat2& a) {
  double s = 0.0;
  for (const Complex& c : a.e) s += std::norm(c);
  return std::sqrt(s);
}

/// Hermitian 2x2 observable acting on one qubit. The constructor checks the
/// entries are finite and Hermitian within kNumTol, then symmetrizes exactly
/// (real diagonal, entry(1,0) == conj(entry(0,1)) bitwise), so downstream
/// algebra never sees a residual skew part.
class Observable2 {
 public:
  explicit Observable2(const Mat2& entries);

  const Mat2& entries() const noexcept { return entries_; }
  Complex entry(int i, int j) const { return entries_(i, j); }
  double frobenius() const { return frobenius_norm(entries_); }

 private:
  Mat2 entries_;
};

/// Pure state of a qubit pair, stored as the 2x2 amplitude matrix gamma with
/// psi = sum_ij gamma_ij |i>|j>. The constructor requires finite entries and
/// unit norm (sum |gamma_ij|^2 = 1) within kNumTol.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Mat2& gamma);

  const Mat2& gamma() const noexcept { return gamma_; }

 private:
  Mat2 gamma_;
};

using QubitVector = std::array<Complex, 2>;

/// Maximally entangled state (|00> + |11>) / sqrt(2).
TwoQubitState bell_state();

/// Product state a (x) b from two unit single-qubit vectors. Each factor
/// must be normalized within kNumTol.
TwoQubitState product_state(const QubitVector& a, const QubitVector& b);

/// <psi| (q (x) 1) |psi>, evaluated by explicit 4x4 tensor contraction.
double expectation_x(const TwoQubitState& s, const Observable2& q);

/// <psi| (1 (x) r) |psi>.
double expectation_y(const TwoQubitState& s, const Observable2& r);

/// <psi| (q (x) 1)(1 (x) r) |psi> -- the joint second moment of the two
/// commuting local measurements.
double expectation_xy(const TwoQubitState& s, const Observable2& q,
                      const Observable2& r);

/// Covariance E[XY] - E[X]E[Y] of the local measurement outcomes.
double quantum_covariance(const TwoQubitState& s, const Observable2& q,
                          const Observable2& r);

/// Singular values of the amplitude matrix, descending. sigma1 is computed
/// from the larger eigenvalue of gamma gamma^dagger in closed form and
/// sigma2 as |det gamma| / sigma1, which stays accurate when the state is
/// nearly a product.
struct SchmidtCoefficients {
  double sigma1;
  double sigma2;
};
SchmidtCoefficients schmidt_coefficients(const TwoQubitState& s);

/// True iff the state is a product state: second Schmidt coefficient <= tol.
/// The equivalent test |det gamma| <= tol * sigma1 is evaluated as well and
/// a disagreement raises ConsistencyError. Requires tol >= 0.
bool is_separable(const TwoQubitState& s, double tol);

/// Eigenvalues (descending) and spectral projectors of a 2x2 Hermitian
/// observable. When the eigenvalue gap is below
/// kDegenGapFactor * max(1, |l1| + |l2|) the operator is a near-multiple of
/// the identity: `degenerate` is set and the projectors collapse to
/// (identity, zero).
struct SpectralDecomposition2 {
  std::array<double, 2> eigenvalues;
  std::array<Mat2, 2> projectors;
  bool degenerate;
};
SpectralDecomposition2 spectral_decomposition(const Observable2& q);

}  // namespace covsep
