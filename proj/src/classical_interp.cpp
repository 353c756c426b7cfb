#include "fourier_interp/classical_interp.hpp"

#include <cmath>
#include <numbers>

#include "fourier_interp/errors.hpp"

namespace fourier_interp {

NodeSet NodeSet::lagrange(std::vector<double> points) {
  NodeSet s;
  s.derivative_orders.assign(points.size(), 1);
  s.points = std::move(points);
  s.validate();
  return s;
}

int NodeSet::total_order() const {
  int d = 0;
  for (int o : derivative_orders) d += o;
  return d;
}

void NodeSet::validate() const {
  if (points.empty()) throw NumericalError(ErrorKind::ShapeMismatch, "node set is empty");
  if (points.size() != derivative_orders.size()) {
    throw NumericalError(ErrorKind::ShapeMismatch, "one derivative order per node is required");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) throw NumericalError(ErrorKind::InvalidArgument, "node is not finite");
    if (derivative_orders[i] < 1) throw NumericalError(ErrorKind::InvalidArgument, "derivative order must be >= 1");
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw NumericalError(ErrorKind::InvalidArgument, "nodes must be strictly increasing");
    }
  }
}

double lagrange_basis(const NodeSet& nodes, std::size_t k, double x) {
  nodes.validate();
  if (k >= nodes.points.size()) throw NumericalError(ErrorKind::IndexOutOfRange, "Lagrange index out of range");
  for (int o : nodes.derivative_orders) {
    if (o != 1) throw NumericalError(ErrorKind::InvalidArgument, "Lagrange basis needs first-order data only");
  }
  double p = 1.0;
  const double xk = nodes.points[k];
  for (std::size_t j = 0; j < nodes.points.size(); ++j) {
    if (j != k) p *= (x - nodes.points[j]) / (xk - nodes.points[j]);
  }
  return p;
}

double lagrange_interpolate(const NodeSet& nodes, const std::vector<double>& values, double x) {
  if (values.size() != nodes.points.size()) throw NumericalError(ErrorKind::ShapeMismatch, "one value per node");
  double s = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) s += values[k] * lagrange_basis(nodes, k, x);
  return s;
}

std::vector<double> hermite_interpolate(const NodeSet& nodes, const std::vector<std::vector<double>>& data) {
  nodes.validate();
  if (data.size() != nodes.points.size()) throw NumericalError(ErrorKind::ShapeMismatch, "one data row per node");
  std::vector<double> z;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < nodes.points.size(); ++k) {
    if (data[k].size() != std::size_t(nodes.derivative_orders[k])) {
      throw NumericalError(ErrorKind::ShapeMismatch, "data row length must equal the derivative order");
    }
    for (int j = 0; j < nodes.derivative_orders[k]; ++j) {
      z.push_back(nodes.points[k]);
      owner.push_back(k);
    }
  }
  const std::size_t m = z.size();

  // Divided-difference table over repeated nodes; equal arguments use f^{(j)}/j!.
  std::vector<std::vector<double>> dd(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) dd[i][0] = data[owner[i]][0];
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i + j < m; ++i) {
      if (z[i + j] == z[i]) {
        dd[i][j] = data[owner[i]][j] / std::tgamma(double(j) + 1.0);
      } else {
        dd[i][j] = (dd[i + 1][j - 1] - dd[i][j - 1]) / (z[i + j] - z[i]);
      }
    }
  }

  // Newton form to monomials: accumulate prod (x - z_i) as a running polynomial.
  std::vector<double> coeffs(m, 0.0), basis{1.0};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[0][j] * basis[i];
    std::vector<double> next(basis.size() + 1, 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= z[j] * basis[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

double evaluate_polynomial(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

double shannon_reconstruct(const std::vector<double>& samples, double r, double x) {
  return shannon_reconstruct_report(samples, r, x, 0.0).value;
}

ShannonResult shannon_reconstruct_report(const std::vector<double>& samples, double r, double x, double tail_bound) {
  if (samples.size() % 2 == 0) throw NumericalError(ErrorKind::ShapeMismatch, "samples must cover n = -N..N");
  if (!(r > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "band limit r must be positive");
  const long n_max = long(samples.size() / 2);
  const double rx = r * x;
  // Exactly at a sample the cardinal series collapses to that sample.
  const double nearest = std::round(rx);
  if (rx == nearest && std::fabs(nearest) <= double(n_max)) {
    return {samples[std::size_t(long(nearest) + n_max)], tail_bound};
  }
  // sin(pi(rx - n)) = (-1)^n sin(pi rx); factor it out of the sum.
  const double s = std::sin(std::numbers::pi * rx);
  double sum = 0.0;
  for (long n = -n_max; n <= n_max; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    sum += samples[std::size_t(n + n_max)] * sign / (std::numbers::pi * (rx - double(n)));
  }
  return {s * sum, tail_bound};
}

double sinc_product_partial(double x, long J) {
  if (J < 1) throw NumericalError(ErrorKind::InvalidArgument, "product needs J >= 1");
  double p = 1.0;
  const double x2 = x * x;
  for (long j = 1; j <= J; ++j) p *= 1.0 - x2 / (double(j) * double(j));
  return p;
}

}  // namespace fourier_interp
