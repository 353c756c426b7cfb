#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fourier_interp/errors.hpp"

namespace fourier_interp {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (computed once per order, thread-safe).
const GaussLegendreRule& gauss_legendre(int order);

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  long nodes_used = 0;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error_estimate += o.error_estimate;
    nodes_used += o.nodes_used;
    return *this;
  }
};

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  // Smallest panel, relative to the full interval, before giving up.
  double min_panel = 1e-4;
  int max_panels = 20000;
  // Initial uniform split of the interval.
  int initial_panels = 1;
  // When false an unresolved integral is returned with its error estimate.
  bool throw_on_failure = true;
};

/// Adaptive Gauss-Legendre (order 16, checked against order 32 on the same
/// panel) of a complex integrand over [a, b]. Panels are visited left to right
/// so the result is reproducible for a given subdivision.
QuadratureResult integrate_interval(const std::function<std::complex<double>(double)>& g, double a, double b,
                                    const AdaptiveOptions& opts = {});

}  // namespace fourier_interp
