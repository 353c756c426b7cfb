#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "fourier_interp/errors.hpp"

namespace fourier_interp {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// A point of the upper half-plane. Construction with Im <= 0 is rejected.
class UpperHalfPoint {
 public:
  UpperHalfPoint(double re, double im) : z_(re, im) {
    if (!(im > 0.0) || !std::isfinite(re) || !std::isfinite(im)) {
      throw NumericalError(ErrorKind::InvalidArgument, "point is not in the upper half-plane");
    }
  }
  explicit UpperHalfPoint(cplx z) : UpperHalfPoint(z.real(), z.imag()) {}

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  cplx value() const noexcept { return z_; }

  UpperHalfPoint shifted(double by) const { return UpperHalfPoint(z_ + by); }
  UpperHalfPoint inverted() const { return UpperHalfPoint(-1.0 / z_); }

 private:
  cplx z_;
};

/// Truncation control for the raw q-series.
struct SeriesTolerance {
  double abs_tol = 1e-17;
  int max_terms = 400;
  // Raw series refuse points closer to the real axis than this.
  double im_floor = 0.05;
  // Kahan-compensated accumulation of the terms.
  bool compensated = true;

  void validate() const {
    if (!(abs_tol > 0.0) || max_terms < 8) {
      throw NumericalError(ErrorKind::InvalidArgument, "SeriesTolerance needs abs_tol > 0 and max_terms >= 8");
    }
  }
};

namespace detail {

template <typename Real>
class ComplexAccumulator {
 public:
  explicit ComplexAccumulator(bool compensated) : compensated_(compensated) {}

  void add(std::complex<Real> term) {
    if (!compensated_) {
      sum_ += term;
      return;
    }
    re_ = kahan(re_, re_c_, term.real());
    im_ = kahan(im_, im_c_, term.imag());
  }

  std::complex<Real> value() const { return compensated_ ? std::complex<Real>(re_, im_) : sum_; }

 private:
  static Real kahan(Real sum, Real& carry, Real x) {
    const Real y = x - carry;
    const Real t = sum + y;
    carry = (t - sum) - y;
    return t;
  }

  bool compensated_;
  std::complex<Real> sum_{0, 0};
  Real re_ = 0, im_ = 0, re_c_ = 0, im_c_ = 0;
};

// Smallest N with 2 |q|^{N^2} / (1 - |q|) < abs_tol, the tail bound for
// sum_{|n| >= N} q^{n^2}.
template <typename Real>
int truncation_index(Real abs_q, const SeriesTolerance& tol) {
  using std::log;
  tol.validate();
  const Real log_q = log(abs_q);
  const Real target = log(Real(tol.abs_tol) * (Real(1) - abs_q) / Real(2));
  int n = 1;
  while (Real(n) * Real(n) * log_q >= target) {
    if (++n > tol.max_terms) {
      throw NumericalError(ErrorKind::ToleranceUnreachable, "q-series needs more than max_terms terms");
    }
  }
  return n;
}

template <typename Real>
void check_floor(const std::complex<Real>& z, const SeriesTolerance& tol) {
  if (!(z.imag() > 0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "theta series needs Im z > 0");
  }
  if (z.imag() < Real(tol.im_floor)) {
    throw NumericalError(ErrorKind::ToleranceUnreachable, "Im z is below the q-series floor");
  }
}

}  // namespace detail

/// theta_3(z) = sum_n exp(pi i n^2 z), summed directly.
template <typename Real>
std::complex<Real> theta3_series(std::complex<Real> z, const SeriesTolerance& tol = {}) {
  using std::exp;
  detail::check_floor(z, tol);
  const Real pi_r = std::numbers::pi_v<Real>;
  const int n_max = detail::truncation_index(exp(-pi_r * z.imag()), tol);
  detail::ComplexAccumulator<Real> acc(tol.compensated);
  // Smallest terms first.
  for (int n = n_max - 1; n >= 1; --n) {
    const Real n2 = Real(n) * Real(n);
    acc.add(Real(2) * exp(std::complex<Real>(0, pi_r * n2) * z));
  }
  acc.add(std::complex<Real>(1, 0));
  return acc.value();
}

/// theta_4(z) = sum_n (-1)^n exp(pi i n^2 z).
template <typename Real>
std::complex<Real> theta4_series(std::complex<Real> z, const SeriesTolerance& tol = {}) {
  using std::exp;
  detail::check_floor(z, tol);
  const Real pi_r = std::numbers::pi_v<Real>;
  const int n_max = detail::truncation_index(exp(-pi_r * z.imag()), tol);
  detail::ComplexAccumulator<Real> acc(tol.compensated);
  for (int n = n_max - 1; n >= 1; --n) {
    const Real n2 = Real(n) * Real(n);
    const Real sign = (n % 2 == 0) ? Real(2) : Real(-2);
    acc.add(sign * exp(std::complex<Real>(0, pi_r * n2) * z));
  }
  acc.add(std::complex<Real>(1, 0));
  return acc.value();
}

/// theta_2(z) = sum_n exp(pi i (n + 1/2)^2 z).
template <typename Real>
std::complex<Real> theta2_series(std::complex<Real> z, const SeriesTolerance& tol = {}) {
  using std::exp;
  detail::check_floor(z, tol);
  const Real pi_r = std::numbers::pi_v<Real>;
  // (n + 1/2)^2 >= n^2, so the theta_3 truncation index also bounds this tail.
  const int n_max = detail::truncation_index(exp(-pi_r * z.imag()), tol);
  detail::ComplexAccumulator<Real> acc(tol.compensated);
  for (int n = n_max - 1; n >= 0; --n) {
    const Real k = Real(n) + Real(0.5);
    acc.add(Real(2) * exp(std::complex<Real>(0, pi_r * k * k) * z));
  }
  return acc.value();
}

/// (-iz)^{1/2} on the branch that is positive on the imaginary axis.
template <typename Real>
std::complex<Real> sqrt_neg_iz(std::complex<Real> z) {
  // -iz has positive real part on H, where the principal root is continuous.
  return std::sqrt(std::complex<Real>(z.imag(), -z.real()));
}

cplx theta3(const UpperHalfPoint& z, const SeriesTolerance& tol = {});
cplx theta2(const UpperHalfPoint& z, const SeriesTolerance& tol = {});
cplx theta4(const UpperHalfPoint& z, const SeriesTolerance& tol = {});
cplx sqrt_neg_iz(const UpperHalfPoint& z);

struct ThetaTriple {
  cplx theta2;
  cplx theta3;
  cplx theta4;
};

/// All three thetas at any z in H. Points near the real axis are first moved
/// into the standard fundamental domain with z -> z + 1 and z -> -1/z, so the
/// values stay accurate (including their tiny size near cusps).
ThetaTriple theta_triple(cplx z);

/// theta(z), h(z) = 1 - 2 lambda(z) held as the ratio h_num / h_den with
/// h_num = theta_4^4 - theta_2^4 and h_den = theta_3^4. The projective form
/// stays finite at the cusp 1, where h itself has a pole.
struct ModularPoint {
  cplx z;
  cplx theta;
  cplx h_num;
  cplx h_den;

  cplx h() const { return h_num / h_den; }
};

ModularPoint modular_point(cplx z);

cplx lambda_modular(const UpperHalfPoint& z);
cplx h_function(const UpperHalfPoint& z);
cplx hauptmodul_J(const UpperHalfPoint& z);

/// |tau - 2n| > 1 for every integer n.
bool in_region_S(const UpperHalfPoint& tau);

/// Integer Mobius map (a z + b) / (c z + d).
struct Mobius {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  cplx apply(cplx z) const {
    return (double(a) * z + double(b)) / (double(c) * z + double(d));
  }
  Mobius operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  /// Congruent to the identity mod 2 (up to sign), i.e. an element of Gamma(2).
  bool in_gamma2() const {
    auto odd = [](std::int64_t v) { return (v % 2 + 2) % 2 == 1; };
    return odd(a) && odd(d) && !odd(b) && !odd(c);
  }
};

struct OrbitPoint {
  UpperHalfPoint point;
  Mobius word;  // point = word.apply(tau)
};

struct OrbitOptions {
  double dedup_tol = 1e-12;
  std::size_t max_points = 10000;
};

/// Gamma_theta orbit of tau reachable by words of length <= depth in
/// z -> z + 2, z -> z - 2 and z -> -1/z. The first entry is tau itself.
std::vector<OrbitPoint> gamma_theta_orbit_words(const UpperHalfPoint& tau, int depth, const OrbitOptions& opts = {});
std::vector<UpperHalfPoint> gamma_theta_orbit(const UpperHalfPoint& tau, int depth, const OrbitOptions& opts = {});

/// Largest Im over Gamma(2)-images of p that are not translates p + 2k.
/// Images with |c| <= max_c are enumerated.
double gamma2_secondary_height(cplx p, int max_c = 24);

}  // namespace fourier_interp
