#ifndef PNP_DIAGNOSTICS_HPP
#define PNP_DIAGNOSTICS_HPP

#include <optional>

#include "pnp/grid.hpp"

namespace pnp {

struct SimParams;
struct StepState;

/// x ln x with the limit convention 0 ln 0 = 0. Throws on x < 0.
double xlogx(double x);

/// Discrete free energy
///   <p ln p, 1>_h + <n ln n, 1>_h + (eps^2/2) ||grad_h phi||_h^2.
double energy(const Field& p, const Field& n, const Field& phi, double epsilon);

/// Two-level modified energy dissipated by the second-order scheme:
/// the average of the entropy terms over both levels plus
/// (eps^2/2) <grad_h phi, grad_h phi_prev>_h. Symmetric in the two levels.
double modified_energy(const Field& p, const Field& n, const Field& p_prev,
                       const Field& n_prev, const Field& phi,
                       const Field& phi_prev, double epsilon);

struct DiagRecord {
  double time = 0.0;
  long step = 0;
  double min_p = 0.0;
  double min_n = 0.0;
  double mass_p_drift = 0.0;  ///< mass(p^k) - mass(p^0)
  double mass_n_drift = 0.0;
  double energy = 0.0;
  std::optional<double> modified_energy;  ///< absent at k = 0 and without history
};

/// Fill a DiagRecord from a step state. modified_energy is present iff the
/// state carries a previous level; its phi^{k-1} is recovered by a fresh
/// Poisson solve from the stored previous densities.
DiagRecord record(const StepState& state, double initial_mass_p,
                  double initial_mass_n, const SimParams& params);

}  // namespace pnp

#endif
