#pragma once

#include <cstddef>
#include <vector>

namespace fourier_interp {

/// Strictly increasing points with a derivative count per point (1 for Lagrange data).
struct NodeSet {
  std::vector<double> points;
  std::vector<int> derivative_orders;

  static NodeSet lagrange(std::vector<double> points);
  int total_order() const;
  void validate() const;
};

/// p_k(x) = prod_{j != k} (x - x_j) / (x_k - x_j).
double lagrange_basis(const NodeSet& nodes, std::size_t k, double x);
/// sum_k values[k] p_k(x).
double lagrange_interpolate(const NodeSet& nodes, const std::vector<double>& values, double x);

/// data[k][j] = f^{(j)}(x_k) for j < derivative_orders[k]. Returns monomial
/// coefficients c_0..c_{D-1}, D the total order.
std::vector<double> hermite_interpolate(const NodeSet& nodes, const std::vector<std::vector<double>>& data);
/// Horner evaluation of monomial coefficients.
double evaluate_polynomial(const std::vector<double>& coeffs, double x);

struct ShannonResult {
  double value;
  double tail_bound;  // sum over |n| > N of |f(n/r)| as supplied, or 0
};

/// samples[i] = f(n/r) for n = i - N, i = 0..2N.
double shannon_reconstruct(const std::vector<double>& samples, double r, double x);
/// With a caller-supplied tail estimate carried through.
ShannonResult shannon_reconstruct_report(const std::vector<double>& samples, double r, double x, double tail_bound);

/// prod_{j <= J} (1 - x^2 / j^2).
double sinc_product_partial(double x, long J);

}  // namespace fourier_interp
