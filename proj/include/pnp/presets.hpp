#ifndef PNP_PRESETS_HPP
#define PNP_PRESETS_HPP

#include <cstdint>
#include <string>

#include "pnp/stepper.hpp"

namespace pnp {

enum class PresetName { convergence, gaussian_quadrupole, discontinuous, saline };

PresetName preset_from_string(const std::string& name);
std::string to_string(PresetName name);

/// Parameters of the four built-in experimental setups. All live on the
/// square domain (-0.5, 0.5)^2. Defaults reproduce the published runs; grid
/// resolution, tau, t_final, epsilon and (for saline) rho0/seed are all
/// overridable.
struct PresetSpec {
  PresetName name = PresetName::convergence;
  GridSpec grid{256, 1.0, -0.5, -0.5};
  double epsilon = 1.0;
  double tau = 0.01;
  double t_final = 0.0;     ///< 0 means use the preset default
  double rho0 = 1.0;        ///< saline only
  std::uint64_t seed = 0;   ///< saline only; required there
  bool seed_set = false;
};

/// Spec with the published defaults for the given setup.
PresetSpec default_preset(PresetName name);

struct PresetData {
  Field p0, n0, rho_f;
  SimParams params;
};

/// Deterministic constructor for a preset: initial concentrations, fixed
/// charge and run parameters. Pure function of the spec (including seed).
///
///  - convergence:         p0 = cos^2(pi(x+y)), n0 = cos^2(pi(x-y)), rho_f = 0.
///  - gaussian_quadrupole: four signed Gaussian bumps of amplitude 200 at
///                         (+-0.25, +-0.25), p0 = n0 = 0.1.
///  - discontinuous:       rho_f = 4 on [0.15,0.25]^2, p0 = 1 and n0 = 2 on
///                         [0,0.2]^2, zero elsewhere (closed-box indicators).
///  - saline:              p0, n0 i.i.d. uniform [0,1] per node from the
///                         seeded generator (p0 first, then n0, x-index
///                         fastest), masses matched by shifting the lighter
///                         species up by a constant; rho_f = +rho0 on the
///                         grid column nearest x = 0.25 and -rho0 on the
///                         column nearest x = -0.25.
PresetData build_preset(const PresetSpec& spec);

}  // namespace pnp

#endif
