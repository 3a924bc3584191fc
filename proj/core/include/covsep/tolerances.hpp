#pragma once

namespace covsep {

// Construction tolerance for probability data: cell bounds, normalization and
// marginal consistency. Tables here are short double-precision sums, so 1e-9
// leaves three orders of magnitude of headroom over accumulated roundoff.
inline constexpr double kProbTol = 1e-9;

// Tolerance for analytic identities checked between two double-precision
// computation paths, applied relative to a problem-size scale factor.
inline constexpr double kNumTol = 1e-10;

// Relative eigenvalue-gap factor below which a 2x2 Hermitian operator is
// treated as degenerate: gap <= kDegenGapFactor * max(1, |l1| + |l2|).
inline constexpr double kDegenGapFactor = 1e-9;

}  // namespace covsep
