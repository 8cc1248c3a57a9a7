#pragma once

#include <stdexcept>

namespace pitosc {

// Thrown when a polynomial degree or factorial argument exceeds the
// double-precision safe range.
struct DegreeLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when two eigenstates with different deformation strengths are
// combined in one integral.
struct IncompatibleStatesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a quadrature rule is too small for the requested integrand
// to be integrated exactly.
struct RuleOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when Newton iteration fails to locate a quadrature node.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a sampled integration is requested with too few samples.
struct ResolutionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a series cutoff leaves more than the admissible tail mass.
struct TruncationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace pitosc
