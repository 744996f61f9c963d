#ifndef PNP_EXPMV_HPP
#define PNP_EXPMV_HPP

#include "pnp/slotboom.hpp"

namespace pnp {

struct ExpmvConfig {
  double tail_tolerance = 1e-14;        ///< Poisson-tail truncation bound, in (0, 1)
  double max_step_dimensionless = 500;  ///< cap on t*alpha per substep
  bool renormalize_mass = true;         ///< rescale so mass(result) == mass(v)
};

void validate(const ExpmvConfig& cfg);

/// e^{tL} v by uniformization. With alpha = max |diag(L)| the matrix
/// P = I + L/alpha is entrywise nonnegative with unit column sums, and
///
///   e^{tL} v = e^{-t alpha} sum_k (t alpha)^k / k! P^k v.
///
/// Every truncation of the series is a nonnegative combination of nonnegative
/// vectors, so v >= 0 gives a result >= 0 entrywise in floating point, which
/// is exactly the mechanism behind the schemes' unconditional positivity.
/// The series is cut when the Poisson tail drops below cfg.tail_tolerance;
/// when t*alpha exceeds cfg.max_step_dimensionless the interval is split into
/// equal substeps so e^{-t alpha} stays in normal floating-point range.
/// With cfg.renormalize_mass the result is scaled by mass(v)/mass(raw), making
/// mass conservation exact up to a single rounding.
///
/// Requires t >= 0 and v >= 0 entrywise (the schemes only exponentiate
/// concentrations); throws std::invalid_argument otherwise.
Field expmv(const SlotboomOperator& op, const Field& v, double t,
            const ExpmvConfig& cfg = {});

/// Smallest K with sum_{k>K} e^{-ta} ta^k / k! <= tail_tolerance, by forward
/// recurrence of the Poisson pmf in log space. K = 0 when ta = 0.
int poisson_truncation_order(double t_alpha, double tail_tolerance);

}  // namespace pnp

#endif
