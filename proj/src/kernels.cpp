#include "fourier_interp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace fourier_interp {

const char* to_string(KernelKind kind) noexcept { return kind == KernelKind::plain ? "plain" : "hat"; }

cplx kernel(KernelKind kind, const ModularPoint& t, const ModularPoint& z) {
  const cplx z3 = z.theta * z.theta * z.theta;
  const cplx dd = t.h_den * z.h_den;
  const cplx nn = t.h_num * z.h_num;
  const cplx nd = t.h_num * z.h_den;
  const cplx dn = z.h_num * t.h_den;
  if (kind == KernelKind::plain) return t.theta * z3 * (dd - nn) / (4.0 * (nd - dn));
  return t.theta * z3 * (dd + nn) / (4.0 * (nd + dn));
}

namespace {

double denominator(KernelKind kind, const ModularPoint& t, const ModularPoint& z) {
  const cplx cross = kind == KernelKind::plain ? t.h_num * z.h_den - z.h_num * t.h_den
                                               : t.h_num * z.h_den + z.h_num * t.h_den;
  return std::abs(cross) / std::abs(t.h_den * z.h_den);
}

cplx checked_kernel(KernelKind kind, const ModularPoint& t, const ModularPoint& z, double floor) {
  if (!(denominator(kind, t, z) >= floor)) {
    throw NumericalError(ErrorKind::NearPole, "kernel denominator below the pole floor");
  }
  return kernel(kind, t, z);
}

KernelKind other(KernelKind kind) { return kind == KernelKind::plain ? KernelKind::hat : KernelKind::plain; }

}  // namespace

cplx kernel(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z, const KernelOptions& opts) {
  return checked_kernel(kind, modular_point(tau.value()), modular_point(z.value()), opts.pole_floor);
}

double kernel_denominator(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z) {
  return denominator(kind, modular_point(tau.value()), modular_point(z.value()));
}

cplx kernel_j_form(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z) {
  const cplx lam_t = lambda_modular(tau), lam_z = lambda_modular(z);
  const cplx j_t = hauptmodul_J(tau), j_z = hauptmodul_J(z);
  const cplx h_t = 1.0 - 2.0 * lam_t, h_z = 1.0 - 2.0 * lam_z;
  const cplx th_t = theta_triple(tau.value()).theta3;
  const cplx th_z = theta_triple(z.value()).theta3;
  const cplx num = kind == KernelKind::plain ? j_z * h_t + j_t * h_z : j_z * h_t - j_t * h_z;
  return th_t * th_z * th_z * th_z * num / (4.0 * (j_z - j_t));
}

TransformationResiduals verify_z_transformations(KernelKind kind, const UpperHalfPoint& tau,
                                                 const UpperHalfPoint& z) {
  const cplx base = kernel(kind, tau, z);
  const cplx s = sqrt_neg_iz(z);
  TransformationResiduals r;
  r.translation = std::abs(kernel(kind, tau, z.shifted(2.0)) - base);
  r.inversion = std::abs(kernel(kind, tau, z.inverted()) - s * s * s * kernel(other(kind), tau, z));
  r.scale = std::max(1.0, std::abs(base));
  return r;
}

TransformationResiduals verify_tau_transformations(KernelKind kind, const UpperHalfPoint& tau,
                                                   const UpperHalfPoint& z) {
  const cplx base = kernel(kind, tau, z);
  TransformationResiduals r;
  r.translation = std::abs(kernel(kind, tau.shifted(2.0), z) - base);
  r.inversion = std::abs(kernel(kind, tau.inverted(), z) + sqrt_neg_iz(tau) * kernel(other(kind), tau, z));
  r.scale = std::max(1.0, std::abs(base));
  return r;
}

ResidueReport residue_at(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& location, double radius,
                         double abs_tol) {
  const Contour circle = circle_around(location, radius);
  const ModularPoint t = modular_point(tau.value());
  const QuadratureResult q =
      integrate([&](cplx z) { return kernel(kind, t, modular_point(z)); }, circle, abs_tol * 2.0 * pi);
  return {location, q.value / (2.0 * pi * kI), radius, q.error_estimate / (2.0 * pi)};
}

LeadingPole leading_pole(KernelKind kind, cplx z) {
  if (kind == KernelKind::plain) return {z, kI / (2.0 * pi)};
  const cplx s = sqrt_neg_iz(z);
  return {-1.0 / z, kI / (2.0 * pi * s * s * s)};
}

cplx LeadingPole::coefficient(int n) const {
  if (n < 0) return 0.0;
  if (n == 0) return -kI * pi * residue / 2.0;
  return -kI * pi * residue * std::exp(-double(n) * pi * kI * location);
}

cplx LeadingPole::subtraction(cplx tau) const {
  return residue * (pi / 2.0) / std::tan(pi * (tau - location) / 2.0);
}

cplx fourier_coefficient(KernelKind kind, int n, const UpperHalfPoint& z, double line_height, double abs_tol) {
  if (!(line_height > 1.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "coefficient line must lie in region S (height > 1)");
  }
  const cplx p = leading_pole(kind, z.value()).location;
  const double top = std::max(p.imag(), gamma2_secondary_height(p));
  if (line_height <= top + 1e-3) {
    throw NumericalError(ErrorKind::NearPole, "coefficient line is not above every pole");
  }
  // The amplification e^{n pi H} is applied after integration, so the inner
  // tolerance shrinks by the same factor.
  const double amplification = n > 0 ? std::exp(double(n) * pi * line_height) : 1.0;
  const ModularPoint zp = modular_point(z.value());
  AdaptiveOptions ao;
  ao.abs_tol = abs_tol / amplification;
  const QuadratureResult q = integrate_interval(
      [&](double u) {
        const ModularPoint t = modular_point({u, line_height});
        return 0.5 * kernel(kind, t, zp) * std::exp(-double(n) * pi * kI * u);
      },
      -1.0, 1.0, ao);
  return q.value * std::exp(double(n) * pi * line_height);
}

KernelCoefficientSampler::KernelCoefficientSampler(CoefficientSamplerOptions opts) : opts_(std::move(opts)) {
  const int m = opts_.samples;
  if (m < 16 || opts_.levels.empty()) {
    throw NumericalError(ErrorKind::InvalidArgument, "sampler needs at least 16 samples and one level");
  }
  std::sort(opts_.levels.begin(), opts_.levels.end());
  roots_.resize(m);
  for (int k = 0; k < m; ++k) roots_[k] = std::polar(1.0, -2.0 * pi * double(k) / double(m));
  for (double h : opts_.levels) {
    if (!(h > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "sampling levels must be positive");
    Line line{h, {}};
    line.points.reserve(m);
    for (int j = 0; j < m; ++j) line.points.push_back(modular_point({-1.0 + 2.0 * double(j) / double(m), h}));
    lines_.push_back(std::move(line));
  }
}

const KernelCoefficientSampler::Line& KernelCoefficientSampler::line_for(cplx pole) const {
  const double secondary = gamma2_secondary_height(pole);
  for (const Line& line : lines_) {
    if (std::fabs(line.height - pole.imag()) >= opts_.pole_gap && line.height >= secondary + opts_.secondary_gap) {
      return line;
    }
  }
  throw NumericalError(ErrorKind::NearPole, "no sampling level clears the kernel poles");
}

double KernelCoefficientSampler::level_for(cplx pole) const { return line_for(pole).height; }

std::vector<cplx> KernelCoefficientSampler::regular_coefficients(KernelKind kind, const ModularPoint& z, int max_n,
                                                                 double* sample_max, double* level) const {
  if (max_n < 0) throw NumericalError(ErrorKind::InvalidArgument, "max_n must be nonnegative");
  const LeadingPole pole = leading_pole(kind, z.z);
  const Line& line = line_for(pole.location);
  const int m = opts_.samples;

  std::vector<cplx> g(m);
  for (int j = 0; j < m; ++j) {
    const ModularPoint& t = line.points[j];
    g[j] = kernel(kind, t, z) - pole.subtraction(t.z);
  }
  if (sample_max) {
    *sample_max = 0.0;
    for (const cplx& v : g) *sample_max = std::max(*sample_max, std::abs(v));
  }
  if (level) *level = line.height;

  std::vector<cplx> psi(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    cplx acc = 0.0;
    long idx = 0;
    for (int j = 0; j < m; ++j) {
      acc += g[j] * roots_[idx];
      idx += n;
      if (idx >= m) idx %= m;
    }
    // e^{-n pi i u_j} = (-1)^n e^{-2 pi i n j / M} for u_j = -1 + 2j/M.
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    psi[n] = sign * std::exp(double(n) * pi * line.height) * acc / double(m);
  }
  return psi;
}

std::vector<cplx> KernelCoefficientSampler::coefficients(KernelKind kind, const ModularPoint& z, int max_n) const {
  std::vector<cplx> phi = regular_coefficients(kind, z, max_n);
  const LeadingPole pole = leading_pole(kind, z.z);
  for (int n = 0; n <= max_n; ++n) phi[n] += pole.coefficient(n);
  return phi;
}

}  // namespace fourier_interp
