#ifndef HHG_ERRORS_HPP
#define HHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hhg {

// Invalid parameters or configuration files.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments to an operation (mismatched grids, empty input, ...).
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed (solver non-convergence, blow-up, leakage).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated expansion did not converge within its budget.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Result would be dominated by catastrophic cancellation.
struct instability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested size or feature is outside what this implementation supports.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace hhg

#endif
