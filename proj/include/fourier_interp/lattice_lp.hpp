#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourier_interp/modular_forms.hpp"

namespace fourier_interp {

/// Full-rank lattice; rows of the basis matrix are the basis vectors.
class Lattice {
 public:
  Lattice(Eigen::MatrixXd basis, std::string label = "");

  int dimension() const { return int(basis_.rows()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const std::string& label() const { return label_; }
  double covolume() const { return covolume_; }
  Eigen::MatrixXd gram() const { return basis_ * basis_.transpose(); }
  Lattice scaled(double s) const { return Lattice(s * basis_, label_); }

 private:
  Eigen::MatrixXd basis_;
  std::string label_;
  double covolume_;
};

/// Basis is the inverse transpose, so <v_i*, v_j> = delta_ij.
Lattice dual_lattice(const Lattice& lattice);

struct EnumerationOptions {
  long budget = 50'000'000;  // visited search-tree nodes
};

/// Every lattice vector of norm <= radius (origin included), via a
/// Fincke-Pohst search over the Gram-Schmidt bounds, in a fixed order.
std::vector<Eigen::VectorXd> short_vectors(const Lattice& lattice, double radius, const EnumerationOptions& opts = {});

/// z1, z2, hex, e8.
Lattice lattice_fixture(std::string_view label);
/// First line n, then n rows of n numbers.
Lattice parse_lattice(std::istream& in, std::string label = "file");
Lattice load_lattice(const std::filesystem::path& path);

/// A function on R^n with its Fourier transform and Gaussian-type decay
/// |f(x)| <= envelope e^{-decay |x|^2}.
struct LatticeFunctionPair {
  std::string label;
  std::function<cplx(const Eigen::VectorXd&)> f;
  std::function<cplx(const Eigen::VectorXd&)> f_hat;
  double decay = 0.0;
  double hat_decay = 0.0;
  double envelope = 1.0;
  double hat_envelope = 1.0;
};

/// e^{-pi t |x|^2} in dimension n, transform t^{-n/2} e^{-pi |y|^2 / t}.
LatticeFunctionPair gaussian_pair(int dimension, double t = 1.0);
/// x -> e^{pi i z x^2} on R, transform (-iz)^{-1/2} e^{pi i (-1/z) y^2}.
LatticeFunctionPair complex_gaussian_pair(const UpperHalfPoint& z);

struct PoissonReport {
  cplx lhs;
  cplx rhs;
  double residual;
  double lhs_tail_bound;
  double rhs_tail_bound;
  std::size_t lhs_terms;
  std::size_t rhs_terms;
};

/// sum_{x in L} f(x) against covolume^{-1} sum_{y in L*} f^(y), both sums
/// truncated at radius_budget.
PoissonReport poisson_check(const LatticeFunctionPair& pair, const Lattice& lattice, double radius_budget,
                            const EnumerationOptions& opts = {});

/// pi^{n/2} r^n / Gamma(n/2 + 1).
double ball_volume(int n, double radius);

struct DensityReport {
  double minimal_length;
  double covolume;
  double density;
};

DensityReport lattice_packing_density(const Lattice& lattice, const EnumerationOptions& opts = {});

/// Radial auxiliary function for the LP bound. The vector evaluators, when
/// present, replace the radial ones on lattices (product functions are not radial).
struct LPCertificate {
  std::string label;
  std::function<double(double)> f;
  std::function<double(double)> f_hat;
  double r = 1.0;
  int dimension = 1;
  std::vector<double> sign_grid;
  std::vector<double> positivity_grid;
  std::function<double(const Eigen::VectorXd&)> f_vec;
  std::function<double(const Eigen::VectorXd&)> f_hat_vec;
};

struct CertificateOutcome {
  bool passed = false;
  std::optional<double> bound;
  // 1: f(s) > 0 for s >= r; 2: f^(s) < 0; 3: normalization.
  int violated_condition = 0;
  double radius = 0.0;
  double value = 0.0;
};

CertificateOutcome lp_certificate_check(const LPCertificate& c, double slack = 1e-9);

/// Triangle (1 - |x|)_+ with f^ = sinc^2, r = 1, grids of the given spacing up to r_max.
LPCertificate triangle_certificate(double r = 1.0, double spacing = 1e-3, double r_max = 10.0);
/// Product of triangles on R^n; f^ is the product of sinc^2.
LPCertificate product_triangle_certificate(int dimension, double r, double spacing = 1e-2, double r_max = 6.0);
/// e^{-pi |x|^2} in dimension n with the given r.
LPCertificate gaussian_certificate(int dimension, double r, double spacing = 1e-2, double r_max = 6.0);

struct SharpnessGap {
  double scale;  // lattice scaled so its minimal vector has length r
  double dropped_f;
  double dropped_f_hat;
  double slack;  // 1 - 1/covolume of the scaled lattice
  double density;
  double bound;
};

/// Terms dropped from Poisson summation in the LP argument: sum |f(x)| over
/// nonzero x in L and sum f^(y) over nonzero y in L*, up to radius.
SharpnessGap lp_bound_sharpness_gap(const Lattice& lattice, const LPCertificate& c, double radius = 8.0,
                                    const EnumerationOptions& opts = {});

}  // namespace fourier_interp
