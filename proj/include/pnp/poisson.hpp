#ifndef PNP_POISSON_HPP
#define PNP_POISSON_HPP

#include "pnp/grid.hpp"

namespace pnp {

/// Direct spectral solver for -eps^2 Delta_h phi = rhs on the periodic grid,
/// with the mean-zero gauge <phi, 1>_h = 0. The 5-point stencil is diagonal
/// in the discrete Fourier basis with eigenvalues
/// (4/h^2)(sin^2(pi k/N) + sin^2(pi l/N)); the zero mode of phi is set to 0.
class PoissonSolver {
 public:
  PoissonSolver(const GridSpec& spec, double epsilon,
                double mean_tolerance = 1e-10);

  const GridSpec& spec() const { return spec_; }
  double epsilon() const { return epsilon_; }
  double mean_tolerance() const { return mean_tolerance_; }

  /// Throws CompatibilityError when |mass(rhs)| > mean_tolerance * max(1, ||rhs||_inf).
  Field solve(const Field& rhs) const;

 private:
  GridSpec spec_;
  double epsilon_;
  double mean_tolerance_;
};

/// mass(p) - mass(n) + mass(rho_f): the charge imbalance that must vanish for
/// the periodic Poisson problem to be solvable.
double check_compatibility(const Field& p, const Field& n, const Field& rho_f);

}  // namespace pnp

#endif
