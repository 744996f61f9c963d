#include "pnp/slotboom.hpp"

#include <cmath>
#include <stdexcept>

namespace pnp {

double logistic(double d) {
  if (d >= 0.0) {
    const double z = std::exp(-d);
    return z / (1.0 + z);
  }
  return 1.0 / (1.0 + std::exp(d));
}

SlotboomOperator SlotboomOperator::build(const Field& phi, int species_sign) {
  if (species_sign != 1 && species_sign != -1)
    throw std::invalid_argument("species_sign must be +1 or -1");
  if (!all_finite(phi))
    throw std::invalid_argument("potential has non-finite entries");

  SlotboomOperator op;
  op.psi_ = species_sign == 1 ? phi : scale(phi, -1.0);
  const Field& psi = op.psi_;
  const GridSpec& spec = phi.spec();
  const int n = spec.n;
  const double two_inv_h2 = 2.0 / (spec.h() * spec.h());

  op.w_east_ = Field(spec);
  op.w_west_ = Field(spec);
  op.w_north_ = Field(spec);
  op.w_south_ = Field(spec);
  op.w_diag_ = Field(spec);

#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const int jn = (j + 1 == n) ? 0 : j + 1;
    const int js = (j == 0) ? n - 1 : j - 1;
    for (int i = 0; i < n; ++i) {
      const int ie = (i + 1 == n) ? 0 : i + 1;
      const int iw = (i == 0) ? n - 1 : i - 1;
      const double c = psi(i, j);
      op.w_east_(i, j) = two_inv_h2 * logistic(psi(ie, j) - c);
      op.w_west_(i, j) = two_inv_h2 * logistic(psi(iw, j) - c);
      op.w_north_(i, j) = two_inv_h2 * logistic(psi(i, jn) - c);
      op.w_south_(i, j) = two_inv_h2 * logistic(psi(i, js) - c);
    }
  }

  // Diagonal from the stored neighbor weights: the magnitude is the total
  // outgoing weight of the node, so column sums vanish exactly as stored.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const int jn = (j + 1 == n) ? 0 : j + 1;
    const int js = (j == 0) ? n - 1 : j - 1;
    for (int i = 0; i < n; ++i) {
      const int ie = (i + 1 == n) ? 0 : i + 1;
      const int iw = (i == 0) ? n - 1 : i - 1;
      op.w_diag_(i, j) = -(op.w_west_(ie, j) + op.w_east_(iw, j) +
                           op.w_south_(i, jn) + op.w_north_(i, js));
    }
  }
  return op;
}

Field SlotboomOperator::apply(const Field& f) const {
  if (!f.same_grid(psi_))
    throw std::invalid_argument("field grid does not match operator grid");
  const int n = spec().n;
  Field out(spec());
  const double* v = f.data();
  const double* we = w_east_.data();
  const double* ww = w_west_.data();
  const double* wn = w_north_.data();
  const double* ws = w_south_.data();
  const double* wd = w_diag_.data();
  double* o = out.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const int jn = (j + 1 == n) ? 0 : j + 1;
    const int js = (j == 0) ? n - 1 : j - 1;
    const std::size_t r = std::size_t(j) * n;
    const double* row = v + r;
    const double* row_n = v + std::size_t(jn) * n;
    const double* row_s = v + std::size_t(js) * n;
    auto node = [&](int i, double east, double west) {
      o[r + i] = we[r + i] * east + ww[r + i] * west + wn[r + i] * row_n[i] +
                 ws[r + i] * row_s[i] + wd[r + i] * row[i];
    };
    node(0, row[1], row[n - 1]);
    for (int i = 1; i < n - 1; ++i) node(i, row[i + 1], row[i - 1]);
    node(n - 1, row[0], row[n - 2]);
  }
  return out;
}

double SlotboomOperator::max_diag_magnitude() const {
  return -min_value(w_diag_);
}

double entropy_dissipation(const SlotboomOperator& op, const Field& f) {
  if (!f.same_grid(op.psi()))
    throw std::invalid_argument("field grid does not match operator grid");
  if (!(min_value(f) > 0.0))
    throw std::invalid_argument("entropy_dissipation needs strictly positive f");
  Field lf = op.apply(f);
  Field slotboom_log(f.spec());
  const std::size_t n = f.spec().node_count();
  for (std::size_t k = 0; k < n; ++k)
    slotboom_log.values()[k] = std::log(f.values()[k]) - op.psi().values()[k];
  return inner(lf, slotboom_log);
}

}  // namespace pnp
