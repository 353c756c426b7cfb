#include "fourier_interp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace fourier_interp {

namespace {

constexpr double kEps = 2.220446049250313e-16;

GaussLegendreRule compute_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const long double pi_l = std::numbers::pi_v<long double>;
  for (int i = 0; i < (order + 1) / 2; ++i) {
    long double x = std::cos(pi_l * (i + 0.75L) / (order + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = double(-x);
    rule.nodes[order - 1 - i] = double(x);
    rule.weights[i] = rule.weights[order - 1 - i] = double(w);
  }
  return rule;
}

struct PanelSums {
  std::complex<double> low, high;
  double magnitude;
};

PanelSums panel(const std::function<std::complex<double>(double)>& g, double a, double b) {
  const GaussLegendreRule& r16 = gauss_legendre(16);
  const GaussLegendreRule& r32 = gauss_legendre(32);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double magnitude = 0.0;
  auto sum = [&](const GaussLegendreRule& r) {
    std::complex<double> s = 0.0;
    magnitude = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      const std::complex<double> v = g(mid + half * r.nodes[i]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw NumericalError(ErrorKind::NonfiniteIntegrand, "integrand is not finite at a quadrature node");
      }
      s += r.weights[i] * v;
      magnitude += r.weights[i] * std::abs(v);
    }
    return s * half;
  };
  const std::complex<double> low = sum(r16);
  const std::complex<double> high = sum(r32);
  return {low, high, magnitude * std::fabs(half)};
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1 || order > 512) {
    throw NumericalError(ErrorKind::InvalidArgument, "Gauss-Legendre order out of range");
  }
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

QuadratureResult integrate_interval(const std::function<std::complex<double>(double)>& g, double a, double b,
                                    const AdaptiveOptions& opts) {
  if (!(opts.abs_tol > 0.0) || opts.initial_panels < 1) {
    throw NumericalError(ErrorKind::InvalidArgument, "integrate_interval needs abs_tol > 0");
  }
  QuadratureResult total;
  if (a == b) {
    total.nodes_used = 1;
    return total;
  }
  const double length = std::fabs(b - a);
  const double min_len = opts.min_panel * length;
  int panels = 0;
  bool unresolved = false;

  // Depth-first over a left-to-right stack of pending panels.
  std::vector<std::pair<double, double>> stack;
  for (int k = opts.initial_panels - 1; k >= 0; --k) {
    stack.emplace_back(a + (b - a) * k / opts.initial_panels, a + (b - a) * (k + 1) / opts.initial_panels);
  }
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    const PanelSums s = panel(g, lo, hi);
    total.nodes_used += 48;
    ++panels;
    const double err = std::abs(s.high - s.low);
    const double share = opts.abs_tol * std::fabs(hi - lo) / length;
    const bool too_small = std::fabs(hi - lo) * 0.5 < min_len;
    // Differences at the rounding level of the panel cannot be refined away.
    const bool at_roundoff = err <= 64.0 * kEps * s.magnitude;
    if (err <= share || at_roundoff || too_small || panels + int(stack.size()) >= opts.max_panels) {
      if (err > share && !at_roundoff) unresolved = true;
      total.value += s.high;
      total.error_estimate += err;
      continue;
    }
    const double mid = 0.5 * (lo + hi);
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  if (opts.throw_on_failure && unresolved && total.error_estimate > opts.abs_tol) {
    throw NumericalError(ErrorKind::ToleranceUnreachable,
                         "adaptive quadrature stopped with error estimate " + std::to_string(total.error_estimate) +
                             " above " + std::to_string(opts.abs_tol));
  }
  return total;
}

}  // namespace fourier_interp
