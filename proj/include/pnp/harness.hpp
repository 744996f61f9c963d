#ifndef PNP_HARNESS_HPP
#define PNP_HARNESS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnp/presets.hpp"
#include "pnp/stepper.hpp"

namespace pnp {

/// Everything a `run` invocation needs. `preset` doubles as the parameter
/// block (grid, epsilon, tau, t_final) for inline runs, where the initial
/// concentrations are the given constants and rho_f = 0.
struct RunConfig {
  bool use_preset = true;
  PresetSpec preset;
  std::optional<std::pair<double, double>> inline_constants;  ///< p0, n0
  Scheme scheme = Scheme::etd2;
  std::string output_dir = "out";
  std::vector<double> snapshot_times;
  int diagnostics_every = 1;
  ExpmvConfig expmv;
  bool project_compatibility = false;
};

/// Parse a JSON config file into a RunConfig. Unknown keys are a ConfigError.
RunConfig load_run_config(const std::string& path);

/// Initial data + params for a config, with the compatibility projection
/// applied when requested (constant upward shift of the lighter species).
PresetData materialize(const RunConfig& config);

/// Run one trajectory; write diagnostics.csv and the requested snapshot
/// files (p_t<time>.csv, n_t<time>.csv, phi_t<time>.csv) into output_dir.
void cmd_run(const RunConfig& config);

struct ConvergenceRow {
  std::string resolution;  ///< T/tau for temporal, 1/h for spatial studies
  double err_p = 0.0, err_n = 0.0, err_phi = 0.0;
  std::optional<double> rate_p, rate_n, rate_phi;  ///< absent in the first row
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
};

void write_report_csv(const std::string& path, const ConvergenceReport& report);

/// Temporal study: run the configured scheme for each tau = T/divisor on the
/// fixed grid, compare at t = T in the sup norm against a second-order
/// reference computed with tau = T/reference_divisor, and tabulate errors
/// with log2 rates. Ladder entries equal to the reference are rejected.
ConvergenceReport cmd_converge_time(const RunConfig& base,
                                    const std::vector<long>& tau_divisors,
                                    long reference_divisor);

/// Spatial study: one first-order step with tau = T per resolution, errors
/// against the reference resolution after restricting the reference to the
/// coarse nodes (grids must nest).
ConvergenceReport cmd_converge_space(const RunConfig& base,
                                     const std::vector<int>& inv_h_ladder,
                                     int reference_inv_h);

/// Human-readable table of the built-in presets and their constants.
std::string preset_listing();

/// Least-squares slope of log(err) against log(step size); the single-number
/// order estimate used for acceptance-style checks.
double loglog_slope(const std::vector<double>& step_sizes,
                    const std::vector<double>& errors);

/// Worker-thread cap: PNP_THREADS when set, hardware concurrency otherwise.
int worker_threads();

}  // namespace pnp

#endif
