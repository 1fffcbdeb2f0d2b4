#pragma once

#include <stdexcept>

namespace spinchain {

// Invalid user-supplied parameters: bad chain size, bad grid, bad range.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Physics-validity failure detected while evaluating a model.
struct PhysicsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bogoliubov angle undefined: the dressed field hits cos(2*pi*k/N) at zero
// anisotropy. Perturbing the field by ~1e-12 lifts the degeneracy.
struct DegenerateModeError : PhysicsError {
  using PhysicsError::PhysicsError;
};

// A per-mode factor of the decoherence product left [0, 1] by more than the
// numerical tolerance, which indicates a parameter or branch bug upstream.
struct ConsistencyError : PhysicsError {
  using PhysicsError::PhysicsError;
};

// A density-matrix eigenvalue fell below the positivity tolerance.
struct PositivityError : PhysicsError {
  using PhysicsError::PhysicsError;
};

}  // namespace spinchain
