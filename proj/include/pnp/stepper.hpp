#ifndef PNP_STEPPER_HPP
#define PNP_STEPPER_HPP

#include <functional>
#include <optional>

#include "pnp/diagnostics.hpp"
#include "pnp/expmv.hpp"
#include "pnp/grid.hpp"

namespace pnp {

enum class Scheme { etd1, etd2 };

struct SimParams {
  GridSpec grid;
  double epsilon = 1.0;
  double tau = 0.0;      ///< time step; must divide t_final
  double t_final = 0.0;
  Scheme scheme = Scheme::etd2;
  ExpmvConfig expmv;
  Field rho_f;           ///< fixed charge density
  int diagnostics_every = 1;

  /// T/tau rounded to the integer it must be; throws ConfigError when T/tau
  /// is not an integer to rounding accuracy or tau/t_final are invalid.
  long step_count() const;
};

/// Two-level history advanced by the steppers. phi is always the mean-zero
/// Poisson solution of the current densities; prev levels are absent at k = 0.
struct StepState {
  long step = 0;
  Field p, n;
  std::optional<Field> p_prev, n_prev;
  Field phi;
};

/// Solve phi^0 and assemble the k = 0 state. Validates p0, n0 >= 0 and the
/// charge compatibility (via the Poisson solvability check).
StepState initial_state(const SimParams& params, Field p0, Field n0);

/// One first-order exponential step over tau with the potential frozen at
/// phi^k: p^{k+1} = e^{tau L[-phi^k]} p^k, n^{k+1} = e^{tau L[phi^k]} n^k,
/// then a fresh Poisson solve for phi^{k+1}.
StepState etd1_step(const StepState& state, const SimParams& params);

/// One second-order step: the same frozen-potential exponential applied to
/// the k-1 level over 2*tau. Requires history (k >= 1).
StepState etd2_step(const StepState& state, const SimParams& params);

struct RunSink {
  /// Called for every emitted DiagRecord (k = 0, every diagnostics_every
  /// steps, and the final step).
  std::function<void(const DiagRecord&)> on_record;
  /// Called for the initial state and after every step.
  std::function<void(const StepState&)> on_state;
};

/// Advance step_count() steps with the selected scheme. The second-order
/// scheme performs exactly one first-order bootstrap step to fill the
/// history. Step errors are rethrown with the step index attached.
StepState run(const SimParams& params, Field p0, Field n0,
              const RunSink& sink = {});

}  // namespace pnp

#endif
