#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Parameter outside an operation's documented domain.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Operands that must agree (dimension, grid) do not.
struct mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A point that sits on (or numerically at) the model boundary.
struct boundary_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Spectral data does not decay enough for truncation at lambda_max.
struct decay_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quadrature failed its self-convergence test.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw domain_error(what);
}

}  // namespace hyp
