#include "pnp/expmv.hpp"

#include <cmath>
#include <stdexcept>

namespace pnp {

void validate(const ExpmvConfig& cfg) {
  if (!(cfg.tail_tolerance > 0.0 && cfg.tail_tolerance < 1.0))
    throw std::invalid_argument("ExpmvConfig: tail_tolerance must be in (0, 1)");
  if (!(cfg.max_step_dimensionless > 0.0))
    throw std::invalid_argument("ExpmvConfig: max_step_dimensionless must be > 0");
}

int poisson_truncation_order(double t_alpha, double tail_tolerance) {
  if (!(t_alpha >= 0.0))
    throw std::invalid_argument("poisson_truncation_order: t_alpha must be >= 0");
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0))
    throw std::invalid_argument("poisson_truncation_order: tolerance must be in (0, 1)");
  if (t_alpha == 0.0) return 0;

  const long double target = 1.0L - static_cast<long double>(tail_tolerance);
  const long double log_ta = std::log(static_cast<long double>(t_alpha));
  long double log_pmf = -static_cast<long double>(t_alpha);
  long double cum = std::exp(log_pmf);
  // the pmf mass sits below ta + O(sqrt(ta)); hard stop far beyond that
  const int k_max =
      static_cast<int>(t_alpha + 40.0 * std::sqrt(t_alpha + 1.0) + 100.0);
  int k = 0;
  while (cum < target && k < k_max) {
    ++k;
    log_pmf += log_ta - std::log(static_cast<long double>(k));
    cum += std::exp(log_pmf);
  }
  return k;
}

namespace {

// One fused pass: w_out = (I + L/alpha) w_in and y += coeff * w_out.
// Every contribution is a product of nonnegative factors, so nonnegativity
// of w_in propagates exactly in floating point.
void apply_uniformized(const SlotboomOperator& op, const Field& pdiag,
                       double inv_alpha, const Field& w_in, Field& w_out,
                       Field& y, double coeff) {
  const int n = op.spec().n;
  const double* v = w_in.data();
  const double* we = op.w_east().data();
  const double* ww = op.w_west().data();
  const double* wn = op.w_north().data();
  const double* ws = op.w_south().data();
  const double* pd = pdiag.data();
  double* out = w_out.data();
  double* acc = y.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const int jn = (j + 1 == n) ? 0 : j + 1;
    const int js = (j == 0) ? n - 1 : j - 1;
    const std::size_t r = std::size_t(j) * n;
    const double* row = v + r;
    const double* row_n = v + std::size_t(jn) * n;
    const double* row_s = v + std::size_t(js) * n;
    auto node = [&](int i, double east, double west) {
      const std::size_t k = r + i;
      const double nbr =
          we[k] * east + ww[k] * west + wn[k] * row_n[i] + ws[k] * row_s[i];
      const double value = nbr * inv_alpha + pd[k] * row[i];
      out[k] = value;
      acc[k] += coeff * value;
    };
    node(0, row[1], row[n - 1]);
    for (int i = 1; i < n - 1; ++i) node(i, row[i + 1], row[i - 1]);
    node(n - 1, row[0], row[n - 2]);
  }
}

}  // namespace

Field expmv(const SlotboomOperator& op, const Field& v, double t,
            const ExpmvConfig& cfg) {
  validate(cfg);
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("expmv: t must be finite and >= 0");
  if (!v.same_grid(op.psi()))
    throw std::invalid_argument("expmv: field grid does not match operator grid");
  if (!all_nonnegative(v))
    throw std::invalid_argument("expmv: input has a negative entry");

  const double alpha = op.max_diag_magnitude();
  if (t == 0.0 || alpha == 0.0) return v;

  const double target_mass = mass(v);
  const long substeps =
      static_cast<long>(std::ceil(t * alpha / cfg.max_step_dimensionless));
  const double sub_ta = t * alpha / static_cast<double>(substeps);
  const int order = poisson_truncation_order(sub_ta, cfg.tail_tolerance);
  const double inv_alpha = 1.0 / alpha;

  Field pdiag(v.spec());
  {
    const double* wd = op.w_diag().data();
    double* pd = pdiag.data();
    const std::size_t m = v.spec().node_count();
    for (std::size_t k = 0; k < m; ++k) pd[k] = 1.0 + wd[k] * inv_alpha;
  }

  Field cur = v;
  Field next(v.spec());
  Field y(v.spec());
  const std::size_t m = v.spec().node_count();

  for (long s = 0; s < substeps; ++s) {
    double coeff = std::exp(-sub_ta);
    {
      const double* c = cur.data();
      double* acc = y.data();
      for (std::size_t k = 0; k < m; ++k) acc[k] = coeff * c[k];
    }
    for (int k = 1; k <= order; ++k) {
      coeff *= sub_ta / static_cast<double>(k);
      apply_uniformized(op, pdiag, inv_alpha, cur, next, y, coeff);
      std::swap(cur, next);
    }
    if (cfg.renormalize_mass) {
      const double m_y = mass(y);
      if (m_y > 0.0 && target_mass > 0.0) {
        const double scale_by = target_mass / m_y;
        for (double& val : y.values()) val *= scale_by;
      }
    }
    std::swap(cur, y);
  }
  return cur;
}

}  // namespace pnp
