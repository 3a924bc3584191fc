#pragma once

#include <string>

#include "covsep/classical.hpp"
#include "covsep/quantum.hpp"
#include "covsep/separation.hpp"

namespace covsep {

// JSON wire formats. All doubles are serialized with enough digits to
// round-trip bit-exactly; complex numbers are [re, im] pairs.
//
//   JointDistribution  {"x_values": [...], "y_values": [...],
//                       "probs": [[...], ...]}
//   Observable2        {"entries": [[[re, im], [re, im]],
//                                   [[re, im], [re, im]]]}
//   TwoQubitState      {"gamma": [[[re, im], [re, im]],
//                                 [[re, im], [re, im]]]}
//
// indent < 0 produces the compact single-line form; indent >= 0 pretty-prints
// with that many spaces.

std::string to_json(const JointDistribution& d, int indent = -1);
std::string to_json(const Observable2& q, int indent = -1);
std::string to_json(const TwoQubitState& s, int indent = -1);
std::string to_json(const SampleSummary& s, int indent = -1);
std::string to_json(const SeparationReport& r, int indent = -1);

/// Parse a JointDistribution. Malformed JSON or a missing/of-the-wrong-type
/// field raises ParseError; structurally valid data that breaks a
/// distribution invariant raises InvariantViolation naming the invariant.
JointDistribution joint_distribution_from_json(const std::string& text);

/// Parse an Observable2; same error contract as above, with Hermiticity
/// violations reported through InvariantViolation's residual.
Observable2 observable_from_json(const std::string& text);

/// Parse a TwoQubitState; same error contract as above.
TwoQubitState state_from_json(const std::string& text);

}  // namespace covsep
