#pragma once

#include "covsep/classical.hpp"
#include "covsep/quantum.hpp"
#include "covsep/rng.hpp"

namespace covsep {

/// Uniform draw from the feasible parameter region: u, v uniform in (0, 1),
/// alpha uniform in [max(0, u + v - 1), min(u, v)], outcome values uniform
/// in [-1, 1) and redrawn until distinct.
BinaryParameterization random_feasible_parameterization(SplitMix64& rng);

/// Hermitian observable with diagonal entries and Re/Im of the upper
/// off-diagonal uniform in [-1, 1).
Observable2 random_observable(SplitMix64& rng);

/// random_observable conditioned on an eigenvalue gap of at least min_gap
/// (rejection sampling), so spectral projectors stay well conditioned.
Observable2 random_nondegenerate_observable(SplitMix64& rng,
                                            double min_gap = 1e-6);

/// Haar-like random single-qubit unit vector (normalized complex Gaussian
/// via Box-Muller on SplitMix64 draws).
QubitVector random_qubit(SplitMix64& rng);

/// Product state of two independent random qubits. Always separable.
TwoQubitState random_product_state(SplitMix64& rng);

/// Generic pure two-qubit state: four complex Gaussian amplitudes,
/// normalized. Entangled with probability one.
TwoQubitState random_state(SplitMix64& rng);

}  // namespace covsep
