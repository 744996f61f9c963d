#ifndef PNP_ERRORS_HPP
#define PNP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pnp {

/// Runtime failure of a numerical guarantee (positivity, conservation, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The charge data p - n + rho_f is not mean-free, so the periodic Poisson
/// problem has no solution. Catchable separately from other numerical errors.
struct CompatibilityError : NumericalError {
  using NumericalError::NumericalError;
};

/// Bad configuration input (CLI/config file level).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pnp

#endif
