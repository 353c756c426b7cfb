#include "fourier_interp/fourier_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fourier_interp/quadrature.hpp"

namespace fourier_interp {

double sinc(double x) {
  if (std::fabs(x) < 1e-8) return 1.0 - pi * pi * x * x / 6.0;
  return std::sin(pi * x) / (pi * x);
}

namespace {

cplx cosine_integral(const EvenTestFunction& f, double y, double upper, double abs_tol) {
  AdaptiveOptions ao;
  ao.abs_tol = abs_tol;
  ao.initial_panels = std::max(1, int(std::ceil(2.0 * upper * (1.0 + std::fabs(y)))));
  ao.max_panels = 200000;
  ao.min_panel = 1e-7;
  const QuadratureResult q =
      integrate_interval([&](double x) { return f.evaluator(x) * std::cos(2.0 * pi * x * y); }, 0.0, upper, ao);
  return 2.0 * q.value;
}

}  // namespace

cplx numeric_transform(const EvenTestFunction& f, double y, double abs_tol) {
  if (!(abs_tol > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "abs_tol must be positive");
  if (f.support_radius) return cosine_integral(f, y, *f.support_radius, abs_tol / 2.0);

  if (f.algebraic_power && !(f.decay_rate > 0.0)) {
    const double p = *f.algebraic_power;
    if (!(p > 1.0)) {
      throw NumericalError(ErrorKind::ToleranceUnreachable, "algebraic decay too slow for a cosine transform");
    }
    // Truncation at X and 2X (even integers) with the tail's leading X^{1-p}
    // term extrapolated away.
    double x_cut = std::ceil(std::pow(10.0 * f.envelope / abs_tol, 1.0 / (p + 1.0)));
    x_cut = std::max(16.0, x_cut + std::fmod(x_cut, 2.0));
    const cplx near = cosine_integral(f, y, x_cut, abs_tol / 8.0);
    const cplx far = near + 2.0 * [&] {
      AdaptiveOptions ao;
      ao.abs_tol = abs_tol / 8.0;
      ao.initial_panels = std::max(1, int(std::ceil(2.0 * x_cut * (1.0 + std::fabs(y)))));
      ao.max_panels = 200000;
      ao.min_panel = 1e-7;
      return integrate_interval([&](double x) { return f.evaluator(x) * std::cos(2.0 * pi * x * y); }, x_cut,
                                2.0 * x_cut, ao)
          .value;
    }();
    const double w = std::pow(2.0, p - 1.0);
    return (w * far - near) / (w - 1.0);
  }

  if (!(f.decay_rate > 0.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "test function carries no decay information");
  }
  const double x_cut = std::sqrt(std::max(1.0, std::log(10.0 * f.envelope / abs_tol)) / f.decay_rate);
  return cosine_integral(f, y, std::max(1.0, x_cut), abs_tol / 2.0);
}

cplx complex_gaussian_transform(const UpperHalfPoint& tau, double y) {
  return std::exp(pi * kI * (-1.0 / tau.value()) * y * y) / sqrt_neg_iz(tau);
}

EvenTestFunction complex_gaussian(const UpperHalfPoint& tau) {
  EvenTestFunction f;
  f.label = "complex-gaussian";
  const cplx t = tau.value();
  f.evaluator = [t](double x) { return std::exp(pi * kI * t * x * x); };
  f.exact_transform = [tau](double y) { return complex_gaussian_transform(tau, y); };
  f.decay_rate = pi * tau.im();
  return f;
}

TransformPair dilated_gaussian_pair(double t) {
  if (!(t > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "dilation must be positive");
  auto f_eval = [t](double x) { return cplx(std::exp(-pi * t * x * x)); };
  auto g_eval = [t](double y) { return cplx(std::exp(-pi * y * y / t) / std::sqrt(t)); };
  char buf[48];
  std::snprintf(buf, sizeof buf, "gaussian-t%g", t);
  const std::string label = t == 1.0 ? "gaussian" : buf;
  EvenTestFunction f{label, f_eval, g_eval, pi * t, 1.0, {}, {}};
  EvenTestFunction g{label + "-hat", g_eval, f_eval, pi / t, 1.0 / std::sqrt(t), {}, {}};
  return {f, g};
}

TransformPair triangle_pair() {
  auto tri = [](double x) { return cplx(std::max(0.0, 1.0 - std::fabs(x))); };
  auto sinc2 = [](double y) {
    const double s = sinc(y);
    return cplx(s * s);
  };
  EvenTestFunction f{"triangle", tri, sinc2, 0.0, 1.0, 1.0, {}};
  EvenTestFunction g{"sinc2", sinc2, tri, 0.0, 1.0 / (pi * pi), {}, 2.0};
  return {f, g};
}

EvenTestFunction linear_combination(cplx alpha, const EvenTestFunction& f, cplx beta, const EvenTestFunction& g) {
  EvenTestFunction h;
  h.label = "combination(" + f.label + "," + g.label + ")";
  h.evaluator = [=](double x) { return alpha * f.evaluator(x) + beta * g.evaluator(x); };
  if (f.exact_transform && g.exact_transform) {
    auto ft = *f.exact_transform, gt = *g.exact_transform;
    h.exact_transform = [=](double y) { return alpha * ft(y) + beta * gt(y); };
  }
  h.envelope = std::abs(alpha) * f.envelope + std::abs(beta) * g.envelope;
  if (f.support_radius && g.support_radius) {
    h.support_radius = std::max(*f.support_radius, *g.support_radius);
  } else if (f.algebraic_power || g.algebraic_power) {
    h.algebraic_power = std::min(f.algebraic_power.value_or(1e9), g.algebraic_power.value_or(1e9));
  } else {
    auto rate = [](const EvenTestFunction& e) { return e.support_radius ? 1e9 : e.decay_rate; };
    h.decay_rate = std::min(rate(f), rate(g));
  }
  return h;
}

std::vector<TransformPair> builtin_fixtures() {
  auto hermite = [](double x) { return cplx(x * x * std::exp(-pi * x * x)); };
  auto hermite_hat = [](double y) { return cplx((1.0 / (2.0 * pi) - y * y) * std::exp(-pi * y * y)); };
  TransformPair hermite2{{"hermite2", hermite, hermite_hat, pi / 2.0, 1.0, {}, {}},
                         {"hermite2-hat", hermite_hat, hermite, pi / 2.0, 1.0, {}, {}}};
  return {dilated_gaussian_pair(1.0), dilated_gaussian_pair(2.0), dilated_gaussian_pair(0.5), hermite2,
          triangle_pair()};
}

std::optional<TransformPair> fixture_by_label(std::string_view label) {
  for (TransformPair& p : builtin_fixtures()) {
    if (p.f.label == label) return p;
  }
  return std::nullopt;
}

}  // namespace fourier_interp
