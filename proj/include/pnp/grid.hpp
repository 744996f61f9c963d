#ifndef PNP_GRID_HPP
#define PNP_GRID_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pnp {

/// Geometry of a uniform N x N periodic grid on a square domain.
/// Nodes sit at (x0 + i*h, y0 + j*h) for i, j = 0..N-1; index N is identified
/// with index 0, so every sum over the grid runs over N distinct nodes per axis.
struct GridSpec {
  int n = 0;            ///< nodes per axis, N >= 2
  double length = 1.0;  ///< domain edge length L
  double x0 = -0.5;
  double y0 = -0.5;

  double h() const { return length / n; }
  double x(int i) const { return x0 + i * h(); }
  double y(int j) const { return y0 + j * h(); }
  std::size_t node_count() const { return std::size_t(n) * std::size_t(n); }

  bool operator==(const GridSpec&) const = default;
};

/// Throws std::invalid_argument unless N >= 2 and length > 0.
void validate(const GridSpec& spec);

/// A periodic grid function: N x N node values, stored row-major with the
/// x-index i fastest, i.e. data()[j*N + i]. Index arithmetic is modulo N in
/// both axes. Fields are immutable values in all solver paths; every
/// operation below is a pure function and safe to call concurrently.
class Field {
 public:
  Field() = default;
  explicit Field(const GridSpec& spec, double fill = 0.0);

  /// Sample f(x_i, y_j) at every node.
  static Field sample(const GridSpec& spec,
                      const std::function<double(double, double)>& f);

  const GridSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }

  double operator()(int i, int j) const { return v_[idx(i, j)]; }
  double& operator()(int i, int j) { return v_[idx(i, j)]; }

  /// Access with periodic wraparound (any integer i, j).
  double at_periodic(int i, int j) const;

  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }
  const double* data() const { return v_.data(); }
  double* data() { return v_.data(); }

  bool same_grid(const Field& other) const { return spec_ == other.spec_; }

 private:
  std::size_t idx(int i, int j) const {
    return std::size_t(j) * spec_.n + std::size_t(i);
  }
  GridSpec spec_;
  std::vector<double> v_;
};

/// Standard 5-point Laplacian with periodic wraparound,
/// (f_E + f_W + f_N + f_S - 4 f_C) / h^2.
Field laplacian(const Field& f);

/// Discrete L2 inner product h^2 * sum_ij f_ij g_ij.
double inner(const Field& f, const Field& g);

/// Discrete H1 inner product over staggered face differences,
/// h^2 * sum_ij [Dx f Dx g + Dy f Dy g]; equals ||grad_h f||^2 when f == g.
double h1_inner(const Field& f, const Field& g);

/// Total mass h^2 * sum_ij f_ij.
double mass(const Field& f);

double min_value(const Field& f);
double max_value(const Field& f);
double max_abs(const Field& f);

/// max_ij |f_ij - g_ij| on a shared grid.
double max_abs_diff(const Field& f, const Field& g);

/// Entrywise helpers used by the steppers and diagnostics.
Field add(const Field& a, const Field& b);
Field sub(const Field& a, const Field& b);
Field scale(const Field& f, double s);
Field shift(const Field& f, double c);
bool all_finite(const Field& f);
bool all_nonnegative(const Field& f);

/// Cyclic shift by (a, b) node offsets: out(i, j) = f(i - a, j - b).
Field cyclic_shift(const Field& f, int a, int b);

}  // namespace pnp

#endif
