#include "covsep/random.hpp"

#include <cmath>
#include <numbers>

#include "covsep/errors.hpp"

namespace covsep {

namespace {

// Standard normal deviate via Box-Muller.
double gaussian(SplitMix64& rng) {
  double u1;
  do {
    u1 = rng.next_unit();
  } while (u1 <= 0.0);
  const double u2 = rng.next_unit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

BinaryParameterization random_feasible_parameterization(SplitMix64& rng) {
  double u, v;
  do {
    u = rng.next_unit();
  } while (u <= 0.0);
  do {
    v = rng.next_unit();
  } while (v <= 0.0);
  // With u, v in (0, 1) the feasibility window has positive width, so the
  // draw below never collapses to a point.
  const double lo = std::max(0.0, u + v - 1.0);
  const double hi = std::min(u, v);
  const double alpha = lo + rng.next_unit() * (hi - lo);

  const double x1 = rng.next_symmetric();
  double x2 = rng.next_symmetric();
  while (x2 == x1) x2 = rng.next_symmetric();
  const double y1 = rng.next_symmetric();
  double y2 = rng.next_symmetric();
  while (y2 == y1) y2 = rng.next_symmetric();

  return BinaryParameterization(alpha, u, v, x1, x2, y1, y2);
}

Observable2 random_observable(SplitMix64& rng) {
  const double d00 = rng.next_symmetric();
  const double d11 = rng.next_symmetric();
  const double re = rng.next_symmetric();
  const double im = rng.next_symmetric();
  Mat2 m;
  m(0, 0) = d00;
  m(1, 1) = d11;
  m(0, 1) = Complex(re, im);
  m(1, 0) = Complex(re, -im);
  return Observable2(m);
}

Observable2 random_nondegenerate_observable(SplitMix64& rng, double min_gap) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Observable2 q = random_observable(rng);
    const SpectralDecomposition2 dec = spectral_decomposition(q);
    if (!dec.degenerate && dec.eigenvalues[0] - dec.eigenvalues[1] >= min_gap)
      return q;
  }
  throw GeneratorError(
      "no observable with the requested eigenvalue gap in 100 draws");
}

QubitVector random_qubit(SplitMix64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const QubitVector raw{Complex(gaussian(rng), gaussian(rng)),
                          Complex(gaussian(rng), gaussian(rng))};
    const double norm2 = std::norm(raw[0]) + std::norm(raw[1]);
    if (norm2 < 1e-12) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    return {inv * raw[0], inv * raw[1]};
  }
  throw GeneratorError("qubit draws collapsed to the zero vector repeatedly");
}

TwoQubitState random_product_state(SplitMix64& rng) {
  const QubitVector a = random_qubit(rng);
  const QubitVector b = random_qubit(rng);
  return product_state(a, b);
}

TwoQubitState random_state(SplitMix64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Mat2 g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        g(i, j) = Complex(gaussian(rng), gaussian(rng));
    double norm2 = 0.0;
    for (const Complex& c : g.e) norm2 += std::norm(c);
    if (norm2 < 1e-12) continue;
    const Complex inv(1.0 / std::sqrt(norm2), 0.0);
    return TwoQubitState(inv * g);
  }
  throw GeneratorError("state draws collapsed to the zero vector repeatedly");
}

}  // namespace covsep
