#pragma once

#include <vector>

#include "fourier_interp/contours.hpp"
#include "fourier_interp/modular_forms.hpp"

namespace fourier_interp {

enum class KernelKind { plain, hat };

const char* to_string(KernelKind kind) noexcept;

struct KernelOptions {
  // Smallest admissible |h(tau) -/+ h(z)|.
  double pole_floor = 1e-10;
};

/// K(tau, z) = theta(tau) theta(z)^3 (1 - h(tau) h(z)) / (4 (h(tau) - h(z)))
/// and its hat companion with the signs flipped, evaluated in projective form.
cplx kernel(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z, const KernelOptions& opts = {});

/// The same kernel from precomputed modular data; no pole check.
cplx kernel(KernelKind kind, const ModularPoint& tau, const ModularPoint& z);

/// The J-form theta(tau) theta(z)^3 (J(z) h(tau) +/- J(tau) h(z)) / (4 (J(z) - J(tau))).
cplx kernel_j_form(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z);

/// |h(tau) - h(z)| for plain, |h(tau) + h(z)| for hat.
double kernel_denominator(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z);

struct TransformationResiduals {
  double translation = 0.0;
  double inversion = 0.0;
  // max(1, |K|) at the base point, for relative comparisons.
  double scale = 1.0;
};

/// |K(tau, z+2) - K(tau, z)| and |K(tau, -1/z) - (-iz)^{3/2} K^(tau, z)|
/// (hat and plain exchanged for the hat kernel).
TransformationResiduals verify_z_transformations(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& z);

/// |K(tau+2, z) - K(tau, z)| and |K(-1/tau, z) + (-i tau)^{1/2} K^(tau, z)|.
TransformationResiduals verify_tau_transformations(KernelKind kind, const UpperHalfPoint& tau,
                                                   const UpperHalfPoint& z);

struct ResidueReport {
  UpperHalfPoint location;
  cplx residue;
  double circle_radius;
  double error_estimate;
};

/// Residue of z -> K(tau, z) at location, from a circle integral.
ResidueReport residue_at(KernelKind kind, const UpperHalfPoint& tau, const UpperHalfPoint& location, double radius,
                         double abs_tol = 1e-12);

/// phi_n(z) = (1/2) int_{-1+iH}^{1+iH} K(tau, z) e^{-n pi i tau} d tau. Negative n
/// gives the coefficients that must vanish.
cplx fourier_coefficient(KernelKind kind, int n, const UpperHalfPoint& z, double line_height = 2.5,
                         double abs_tol = 1e-10);

/// The simple pole of tau -> K(tau, z) nearest to i infinity (z itself for
/// K, -1/z for K^) and its tau-residue.
struct LeadingPole {
  cplx location;
  cplx residue;

  /// n-th Fourier coefficient of residue * (pi/2) cot(pi (tau - location)/2).
  cplx coefficient(int n) const;
  cplx subtraction(cplx tau) const;
};

LeadingPole leading_pole(KernelKind kind, cplx z);

struct CoefficientSamplerOptions {
  int samples = 1024;
  std::vector<double> levels{0.40, 0.48, 0.56, 0.64};
  // Minimal distance between the sampling line and the leading pole.
  double pole_gap = 0.04;
  // Minimal distance between the sampling line and every other pole.
  double secondary_gap = 0.05;
};

/// Fourier coefficients of tau -> K(tau, z) - R(tau), R the periodic pole
/// subtraction of LeadingPole, from the trapezoid rule on a low horizontal
/// line. Theta data on each line is computed once at construction.
class KernelCoefficientSampler {
 public:
  explicit KernelCoefficientSampler(CoefficientSamplerOptions opts = {});

  /// psi_0 .. psi_max_n at z, so that phi_n = psi_n + leading_pole.coefficient(n).
  /// sample_max receives max_j |K - R| on the line and level the line height.
  std::vector<cplx> regular_coefficients(KernelKind kind, const ModularPoint& z, int max_n,
                                         double* sample_max = nullptr, double* level = nullptr) const;
  std::vector<cplx> coefficients(KernelKind kind, const ModularPoint& z, int max_n) const;

  /// Sampling height used for a given leading pole location.
  double level_for(cplx pole) const;
  const CoefficientSamplerOptions& options() const { return opts_; }

 private:
  struct Line {
    double height;
    std::vector<ModularPoint> points;
  };
  const Line& line_for(cplx pole) const;

  CoefficientSamplerOptions opts_;
  std::vector<Line> lines_;
  std::vector<cplx> roots_;  // e^{-2 pi i k / M}
};

}  // namespace fourier_interp
