#ifndef PNP_SLOTBOOM_HPP
#define PNP_SLOTBOOM_HPP

#include "pnp/grid.hpp"

namespace pnp {

/// The Slotboom-transformed elliptic operator L[psi] u = div(e^psi grad(u e^-psi))
/// discretized with harmonic-mean face values of e^psi on the periodic grid.
///
/// Stored as five weight fields (structure-of-arrays): the value at neighbor
/// (i+1, j) enters node (i, j) with weight w_east(i, j) and so on, plus the
/// nonpositive diagonal. With sigma(d) = 1/(1 + e^d),
///
///   w(l <- k) = (2/h^2) * sigma(psi_k - psi_l),
///   w_diag(l) = -(2/h^2) * sum_k sigma(psi_l - psi_k),
///
/// so -L has positive diagonal, nonpositive off-diagonal entries and zero
/// column sums: the diagonal magnitude equals the total outgoing weight of the
/// node, exactly as stored (the diagonal is assembled from the same floats as
/// the neighbor weights). That column structure is what makes I + L/alpha a
/// nonnegative column-stochastic matrix for alpha >= max |w_diag|.
///
/// Immutable after build; apply() is pure and safe to call concurrently.
class SlotboomOperator {
 public:
  /// Build L[sign * phi]. sign = -1 is the positive-ion operator L[-phi],
  /// sign = +1 the negative-ion operator L[+phi]. Throws on non-finite phi.
  static SlotboomOperator build(const Field& phi, int species_sign);

  const GridSpec& spec() const { return psi_.spec(); }
  const Field& psi() const { return psi_; }

  const Field& w_east() const { return w_east_; }
  const Field& w_west() const { return w_west_; }
  const Field& w_north() const { return w_north_; }
  const Field& w_south() const { return w_south_; }
  const Field& w_diag() const { return w_diag_; }

  /// 5-point weighted stencil application.
  Field apply(const Field& f) const;

  /// alpha = max |w_diag|; 0 < alpha <= 8/h^2.
  double max_diag_magnitude() const;

 private:
  SlotboomOperator() = default;
  Field psi_;
  Field w_east_, w_west_, w_north_, w_south_, w_diag_;
};

/// <L[psi] f, ln(f / e^psi)>_h for strictly positive f. Nonpositive up to
/// rounding (entropy inequality of the discrete operator). Throws on f <= 0.
double entropy_dissipation(const SlotboomOperator& op, const Field& f);

/// Numerically stable 1/(1 + e^d) for any finite d.
double logistic(double d);

}  // namespace pnp

#endif
