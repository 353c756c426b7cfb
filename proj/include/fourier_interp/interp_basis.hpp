#pragma once

#include <Eigen/Dense>
#include <memory>
#include <mutex>
#include <vector>

#include "fourier_interp/contours.hpp"
#include "fourier_interp/fourier_core.hpp"
#include "fourier_interp/kernels.hpp"

namespace fourier_interp {

/// (1/4) int over path of theta(z)^3 e^{pi i z x^2} dz.
QuadratureResult a0_on(const Contour& path, double x, double abs_tol = 1e-12);

/// a_0(x), on the semicircle for x <= 1.5 and on the polygon above.
double a0(double x, double abs_tol = 1e-10);

/// r_3(m): ordered representations of m as a sum of three integer squares.
std::vector<long long> theta_cubed_coefficients(int max_m);

struct BasisValue {
  double value = 0.0;
  double imag = 0.0;
  double error_estimate = 0.0;
};

struct BasisEngineOptions {
  int max_n = 60;
  CoefficientSamplerOptions sampler;
  // Longest panel of the semicircle angle grid.
  double max_panel_angle = 0.1;
  // Geometric halvings toward each cusp.
  int grading_levels = 14;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;
  double closed_part_tol = 1e-14;
};

/// a_n and a^_n for 0 <= n <= max_n at arbitrary x >= 0.
///
/// phi_n = psi_n + d_n, where d_n are the coefficients of the leading-pole
/// subtraction. The d_n part integrates in closed form (a sinc for a_n, a
/// one-dimensional integral on a path around 0 for a^_n); psi_n is tabulated
/// once on a composite Gauss-Legendre grid over the semicircle, with order 16
/// and 32 rules side by side for an error estimate.
class BasisEngine {
 public:
  explicit BasisEngine(BasisEngineOptions opts = {});

  int max_n() const { return opts_.max_n; }
  const BasisEngineOptions& options() const { return opts_; }
  std::size_t grid_size() const { return grid32_.nodes.size() + grid16_.nodes.size(); }

  BasisValue value(int n, bool hat, double x) const;
  /// Row of values for n = 0 .. max_n.
  std::vector<BasisValue> values(bool hat, double x) const;

  /// C (1 + n)^k bounding max_x max(|a_n|, |a^_n|) over n <= 12 and x in [0, 3].
  std::pair<double, double> tail_envelope() const;

 private:
  struct Node {
    cplx z;
    cplx weight;  // quadrature weight times dz/dphi
    double level;
    double sample_scale;
  };
  struct Grid {
    std::vector<Node> nodes;
    Eigen::MatrixXcd psi[2];  // (max_n + 1) x nodes, plain and hat
  };

  void tabulate(Grid& grid) const;
  Eigen::VectorXcd regular_row(const Grid& grid, bool hat, double x) const;
  Eigen::VectorXd noise_row(const Grid& grid, double x) const;
  cplx closed_part(int n, bool hat, double x, double* err) const;

  BasisEngineOptions opts_;
  KernelCoefficientSampler sampler_;
  Grid grid32_, grid16_;
  mutable std::once_flag envelope_once_;
  mutable std::pair<double, double> envelope_{1.0, 0.0};
};

/// Engine with default options, built on first use.
const BasisEngine& default_basis_engine();

/// a_n(x) (or a^_n(x)); throws tolerance-unreachable when the error estimate exceeds abs_tol.
double basis_value(int n, bool hat, double x, double abs_tol = 1e-8);

/// Cached basis values on an x grid; rows are n, columns are x.
struct BasisTable {
  int max_n = 0;
  std::vector<double> x_grid;
  Eigen::MatrixXd a, a_hat, err_a, err_ahat;
  double max_imag = 0.0;

  /// max over 1 <= n, m <= max_n with sqrt(m) on the grid of |a_n(sqrt m) - delta_nm| and |a^_n(sqrt m)|.
  double node_deviation() const;
};

BasisTable build_basis_table(const BasisEngine& engine, const std::vector<double>& x_grid);
BasisTable build_basis_table(int max_n, const std::vector<double>& x_grid);

/// start, start + step, ... up to stop (inclusive within half a step).
std::vector<double> make_grid(double start, double stop, double step);

/// F(tau, x) (or F^) as the semicircle integral of the kernel, for tau in region S.
cplx generating_F(bool hat, const UpperHalfPoint& tau, double x, double abs_tol = 1e-11);

struct FunctionalEquationReport {
  cplx direct_F;
  cplx hat_sum;
  cplx gaussian;
  double residual;
};

/// F(tau, x) + (-i tau)^{-1/2} F^(-1/tau, x) - e^{pi i tau x^2}, with F^ summed
/// from the basis up to truncation_N.
FunctionalEquationReport gaussian_functional_equation(const UpperHalfPoint& tau, double x, int truncation_N,
                                                      const BasisEngine& engine = default_basis_engine());
double gaussian_functional_equation_residual(const UpperHalfPoint& tau, double x, int truncation_N,
                                             const BasisEngine& engine = default_basis_engine());

struct ReconstructionReport {
  double x;
  int truncation_N;
  double reconstructed;
  double reference;
  double abs_error;
  double term_tail_bound;
};

ReconstructionReport reconstruct(const TransformPair& f, double x, int truncation_N,
                                 const BasisEngine& engine = default_basis_engine());

double poisson_redundancy_residual(const TransformPair& f, int cutoff);

struct ResidueDemonstration {
  cplx below;
  cplx above;
  cplx difference;
  cplx expected;
  double residual;
  double error_estimate;
};

/// F-type integral of K(tau, z) e^{pi i z x^2} over the semicircle deformed
/// below tau minus the one passing above; the difference is e^{pi i tau x^2}.
ResidueDemonstration residue_demonstration(const UpperHalfPoint& tau, double x, double abs_tol = 1e-11);

}  // namespace fourier_interp
