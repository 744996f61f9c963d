#include "pnp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pnp {

void validate(const GridSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("GridSpec: need at least 2 nodes per axis");
  if (!(spec.length > 0.0) || !std::isfinite(spec.length))
    throw std::invalid_argument("GridSpec: domain length must be positive");
  if (!std::isfinite(spec.x0) || !std::isfinite(spec.y0))
    throw std::invalid_argument("GridSpec: origin must be finite");
}

Field::Field(const GridSpec& spec, double fill) : spec_(spec) {
  validate(spec);
  v_.assign(spec.node_count(), fill);
}

Field Field::sample(const GridSpec& spec,
                    const std::function<double(double, double)>& f) {
  Field out(spec);
  for (int j = 0; j < spec.n; ++j)
    for (int i = 0; i < spec.n; ++i) out(i, j) = f(spec.x(i), spec.y(j));
  return out;
}

double Field::at_periodic(int i, int j) const {
  const int n = spec_.n;
  i %= n;
  if (i < 0) i += n;
  j %= n;
  if (j < 0) j += n;
  return v_[idx(i, j)];
}

namespace {

void require_same_grid(const Field& f, const Field& g) {
  if (!f.same_grid(g))
    throw std::invalid_argument("fields live on different grids");
}

}  // namespace

Field laplacian(const Field& f) {
  const int n = f.n();
  const double inv_h2 = 1.0 / (f.spec().h() * f.spec().h());
  Field out(f.spec());
  const double* v = f.data();
  double* o = out.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const int jn = (j + 1 == n) ? 0 : j + 1;
    const int js = (j == 0) ? n - 1 : j - 1;
    const double* row = v + std::size_t(j) * n;
    const double* row_n = v + std::size_t(jn) * n;
    const double* row_s = v + std::size_t(js) * n;
    double* orow = o + std::size_t(j) * n;
    orow[0] = (row[1] + row[n - 1] + row_n[0] + row_s[0] - 4.0 * row[0]) * inv_h2;
    for (int i = 1; i < n - 1; ++i)
      orow[i] = (row[i + 1] + row[i - 1] + row_n[i] + row_s[i] - 4.0 * row[i]) * inv_h2;
    orow[n - 1] =
        (row[0] + row[n - 2] + row_n[n - 1] + row_s[n - 1] - 4.0 * row[n - 1]) * inv_h2;
  }
  return out;
}

double inner(const Field& f, const Field& g) {
  require_same_grid(f, g);
  const double h = f.spec().h();
  double s = 0.0;
  const double* a = f.data();
  const double* b = g.data();
  const std::size_t m = f.spec().node_count();
  for (std::size_t k = 0; k < m; ++k) s += a[k] * b[k];
  return h * h * s;
}

double h1_inner(const Field& f, const Field& g) {
  require_same_grid(f, g);
  const int n = f.n();
  // the h^2 weight cancels the two 1/h factors of the face differences
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    const int js = (j == 0) ? n - 1 : j - 1;
    for (int i = 0; i < n; ++i) {
      const int iw = (i == 0) ? n - 1 : i - 1;
      s += (f(i, j) - f(iw, j)) * (g(i, j) - g(iw, j));
      s += (f(i, j) - f(i, js)) * (g(i, j) - g(i, js));
    }
  }
  return s;
}

double mass(const Field& f) {
  const double h = f.spec().h();
  double s = 0.0;
  for (double v : f.values()) s += v;
  return h * h * s;
}

double min_value(const Field& f) {
  return *std::min_element(f.values().begin(), f.values().end());
}

double max_value(const Field& f) {
  return *std::max_element(f.values().begin(), f.values().end());
}

double max_abs(const Field& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Field& f, const Field& g) {
  require_same_grid(f, g);
  double m = 0.0;
  const double* a = f.data();
  const double* b = g.data();
  const std::size_t n = f.spec().node_count();
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Field add(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field out = a;
  double* o = out.data();
  const double* v = b.data();
  const std::size_t n = a.spec().node_count();
  for (std::size_t k = 0; k < n; ++k) o[k] += v[k];
  return out;
}

Field sub(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field out = a;
  double* o = out.data();
  const double* v = b.data();
  const std::size_t n = a.spec().node_count();
  for (std::size_t k = 0; k < n; ++k) o[k] -= v[k];
  return out;
}

Field scale(const Field& f, double s) {
  Field out = f;
  for (double& v : out.values()) v *= s;
  return out;
}

Field shift(const Field& f, double c) {
  Field out = f;
  for (double& v : out.values()) v += c;
  return out;
}

bool all_finite(const Field& f) {
  for (double v : f.values())
    if (!std::isfinite(v)) return false;
  return true;
}

bool all_nonnegative(const Field& f) {
  for (double v : f.values())
    if (!(v >= 0.0)) return false;
  return true;
}

Field cyclic_shift(const Field& f, int a, int b) {
  const int n = f.n();
  Field out(f.spec());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out(i, j) = f.at_periodic(i - a, j - b);
  return out;
}

}  // namespace pnp
