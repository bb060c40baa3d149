// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ratiocut {

// Argument outside its documented range (q/p outside [0,1], |theta| >= pi, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the validity gate; callers asked for an out-of-regime
// evaluation instead of a silent extrapolation.
struct GateError : std::domain_error {
  using std::domain_error::domain_error;
};

// Geometrically inconsistent configuration (arc leaves the domain, open loop,
// clockwise loop, vanishing region area, ...).
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iteration did not converge / singular system / saddle point.
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural graph problems (disconnected affinity graph, one-sign vector, ...).
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ratiocut
