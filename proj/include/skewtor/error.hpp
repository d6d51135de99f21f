#pragma once

#include <stdexcept>
#include <string>

namespace skewtor {

// Base class for all engine errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or command line (maps to process exit code 2).
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A manifold description violates a structural axiom (antisymmetry, Jacobi,
// structure-tensor identities, metric degeneracy).
struct ValidationError : InputError {
  explicit ValidationError(const std::string& msg) : InputError(msg) {}
};

// A connection constructor was invoked on a manifold outside the class in
// which that connection exists.
struct ClassViolation : InputError {
  explicit ClassViolation(const std::string& msg) : InputError(msg) {}
};

}  // namespace skewtor
