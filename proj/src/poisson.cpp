#include "pnp/poisson.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "pnp/errors.hpp"

namespace pnp {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {
    if (!ptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};

}  // namespace

PoissonSolver::PoissonSolver(const GridSpec& spec, double epsilon,
                             double mean_tolerance)
    : spec_(spec), epsilon_(epsilon), mean_tolerance_(mean_tolerance) {
  validate(spec);
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("PoissonSolver: epsilon must be positive");
  if (!(mean_tolerance >= 0.0))
    throw std::invalid_argument("PoissonSolver: mean_tolerance must be >= 0");
}

Field PoissonSolver::solve(const Field& rhs) const {
  if (!(rhs.spec() == spec_))
    throw std::invalid_argument("rhs grid does not match solver grid");

  const double rhs_mass = mass(rhs);
  const double rhs_scale = std::max(1.0, max_abs(rhs));
  if (std::abs(rhs_mass) > mean_tolerance_ * rhs_scale)
    throw CompatibilityError("Poisson right-hand side is not mean-free: mass = " +
                             std::to_string(rhs_mass));

  const int n = spec_.n;
  const int nc = n / 2 + 1;
  const double h = spec_.h();

  FftwBuffer real_buf(sizeof(double) * spec_.node_count());
  FftwBuffer cplx_buf(sizeof(fftw_complex) * std::size_t(n) * nc);
  double* real = static_cast<double*>(real_buf.ptr);
  fftw_complex* cplx = static_cast<fftw_complex*>(cplx_buf.ptr);

  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd = fftw_plan_dft_r2c_2d(n, n, real, cplx, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_2d(n, n, cplx, real, FFTW_ESTIMATE);
  }

  std::copy(rhs.values().begin(), rhs.values().end(), real);
  fftw_execute(fwd);

  // Stencil eigenvalues of -Delta_h, with the transform normalization folded in.
  const double norm = 1.0 / (double(n) * double(n));
  const double four_inv_h2 = 4.0 / (h * h);
  const double pi = std::acos(-1.0);
  for (int kj = 0; kj < n; ++kj) {
    const double sj = std::sin(pi * kj / n);
    for (int ki = 0; ki < nc; ++ki) {
      fftw_complex& c = cplx[std::size_t(kj) * nc + ki];
      if (ki == 0 && kj == 0) {
        c[0] = 0.0;
        c[1] = 0.0;
        continue;
      }
      const double si = std::sin(pi * ki / n);
      const double lambda = four_inv_h2 * (si * si + sj * sj);
      const double factor = norm / (epsilon_ * epsilon_ * lambda);
      c[0] *= factor;
      c[1] *= factor;
    }
  }

  fftw_execute(bwd);

  Field phi(spec_);
  std::copy(real, real + spec_.node_count(), phi.data());

  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }

  // Pin the gauge: the zero mode is analytically zero, remove the transform's
  // rounding residue as well.
  const double mean = mass(phi) / (spec_.length * spec_.length);
  for (double& v : phi.values()) v -= mean;
  return phi;
}

double check_compatibility(const Field& p, const Field& n, const Field& rho_f) {
  if (!p.same_grid(n) || !p.same_grid(rho_f))
    throw std::invalid_argument("compatibility check needs a shared grid");
  return mass(p) - mass(n) + mass(rho_f);
}

}  // namespace pnp
