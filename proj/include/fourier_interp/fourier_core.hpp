#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourier_interp/modular_forms.hpp"

namespace fourier_interp {

/// Even function of one real variable with decay metadata. The envelope
/// |f(x)| <= envelope * e^{-decay_rate x^2} drives the truncation point of
/// numeric transforms. Compactly supported and algebraically decaying
/// functions record that instead.
struct EvenTestFunction {
  std::string label;
  std::function<cplx(double)> evaluator;
  std::optional<std::function<cplx(double)>> exact_transform;
  double decay_rate = 0.0;
  double envelope = 1.0;
  std::optional<double> support_radius;
  // |f(x)| <= envelope / x^power for large x.
  std::optional<double> algebraic_power;

  cplx operator()(double x) const { return evaluator(x); }
};

struct TransformPair {
  EvenTestFunction f;
  EvenTestFunction f_hat;
};

/// f^(y) = 2 int_0^inf f(x) cos(2 pi x y) dx, truncated where the recorded
/// decay falls below abs_tol / 10.
cplx numeric_transform(const EvenTestFunction& f, double y, double abs_tol = 1e-10);

/// Transform of x -> e^{pi i tau x^2}: (-i tau)^{-1/2} e^{pi i (-1/tau) y^2}.
cplx complex_gaussian_transform(const UpperHalfPoint& tau, double y);

EvenTestFunction complex_gaussian(const UpperHalfPoint& tau);
/// e^{-pi t x^2} paired with t^{-1/2} e^{-pi y^2 / t}.
TransformPair dilated_gaussian_pair(double t);
TransformPair triangle_pair();

/// alpha f + beta g, with the exact transform when both have one.
EvenTestFunction linear_combination(cplx alpha, const EvenTestFunction& f, cplx beta, const EvenTestFunction& g);

/// gaussian, gaussian-t2, gaussian-t0.5, hermite2, triangle.
std::vector<TransformPair> builtin_fixtures();
std::optional<TransformPair> fixture_by_label(std::string_view label);

/// sin(pi x) / (pi x) with the removable point handled.
double sinc(double x);

}  // namespace fourier_interp
