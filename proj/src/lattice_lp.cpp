#include "fourier_interp/lattice_lp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <memory>
#include <sstream>

#include "fourier_interp/fourier_core.hpp"
#include "fourier_interp/quadrature.hpp"

namespace fourier_interp {

Lattice::Lattice(Eigen::MatrixXd basis, std::string label) : basis_(std::move(basis)), label_(std::move(label)) {
  if (basis_.rows() == 0 || basis_.rows() != basis_.cols()) {
    throw NumericalError(ErrorKind::ShapeMismatch, "lattice basis must be a nonempty square matrix");
  }
  if (!basis_.allFinite()) throw NumericalError(ErrorKind::InvalidArgument, "lattice basis has nonfinite entries");
  covolume_ = std::fabs(basis_.determinant());
  if (!(covolume_ > 1e-12)) throw NumericalError(ErrorKind::SingularBasis, "lattice basis is singular");
}

Lattice dual_lattice(const Lattice& lattice) {
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(lattice.basis());
  if (!lu.isInvertible()) throw NumericalError(ErrorKind::SingularBasis, "lattice basis is singular");
  return Lattice(lu.inverse().transpose(), lattice.label() + "*");
}

std::vector<Eigen::VectorXd> short_vectors(const Lattice& lattice, double radius, const EnumerationOptions& opts) {
  if (!(radius > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "enumeration radius must be positive");
  const int n = lattice.dimension();
  const Eigen::LLT<Eigen::MatrixXd> llt(lattice.gram());
  if (llt.info() != Eigen::Success) throw NumericalError(ErrorKind::SingularBasis, "Gram matrix is not definite");
  // |sum c_i b_i|^2 = sum_i q_ii (c_i + sum_{j>i} q_ij c_j)^2
  const Eigen::MatrixXd r = llt.matrixU();
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) {
    q(i, i) = r(i, i) * r(i, i);
    for (int j = i + 1; j < n; ++j) q(i, j) = r(i, j) / r(i, i);
  }

  const double bound = radius * radius * (1.0 + 1e-12);
  std::vector<Eigen::VectorXd> out;
  Eigen::VectorXd coeff = Eigen::VectorXd::Zero(n);
  std::vector<double> partial(n + 1, 0.0);
  long visited = 0;

  // Depth-first from the last coordinate down, integers in increasing order.
  auto recurse = [&](auto&& self, int i) -> void {
    if (++visited > opts.budget) {
      throw NumericalError(ErrorKind::EnumerationBudgetExceeded, "short-vector enumeration exceeded its budget");
    }
    double centre = 0.0;
    for (int j = i + 1; j < n; ++j) centre -= q(i, j) * coeff(j);
    const double room = (bound - partial[i + 1]) / q(i, i);
    if (room < 0.0) return;
    const double half_width = std::sqrt(room);
    const long lo = long(std::ceil(centre - half_width - 1e-12));
    const long hi = long(std::floor(centre + half_width + 1e-12));
    for (long c = lo; c <= hi; ++c) {
      const double d = double(c) - centre;
      const double next = partial[i + 1] + q(i, i) * d * d;
      if (next > bound) continue;
      coeff(i) = double(c);
      partial[i] = next;
      if (i == 0) {
        out.push_back(lattice.basis().transpose() * coeff);
      } else {
        self(self, i - 1);
      }
    }
    coeff(i) = 0.0;
  };
  recurse(recurse, n - 1);

  // Final filter on the actual norm guards against accumulated rounding.
  std::erase_if(out, [&](const Eigen::VectorXd& v) { return v.squaredNorm() > bound; });
  return out;
}

Lattice lattice_fixture(std::string_view label) {
  if (label == "z1") return Lattice(Eigen::MatrixXd::Identity(1, 1), "z1");
  if (label == "z2") return Lattice(Eigen::MatrixXd::Identity(2, 2), "z2");
  if (label == "hex") {
    Eigen::MatrixXd b(2, 2);
    b << 1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0;
    return Lattice(b, "hex");
  }
  if (label == "e8") {
    // D8 generators with last coordinate zero, plus the all-halves glue vector.
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(8, 8);
    b(0, 0) = 2.0;
    for (int i = 1; i < 7; ++i) {
      b(i, i - 1) = -1.0;
      b(i, i) = 1.0;
    }
    b.row(7).setConstant(0.5);
    return Lattice(b, "e8");
  }
  throw NumericalError(ErrorKind::UnknownFixture, "unknown lattice fixture " + std::string(label));
}

Lattice parse_lattice(std::istream& in, std::string label) {
  int n = 0;
  if (!(in >> n) || n < 1 || n > 64) throw NumericalError(ErrorKind::ShapeMismatch, "lattice file needs a dimension");
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> b(i, j))) throw NumericalError(ErrorKind::ShapeMismatch, "lattice file has too few entries");
    }
  }
  std::string extra;
  if (in >> extra) throw NumericalError(ErrorKind::ShapeMismatch, "lattice file has trailing data");
  return Lattice(b, std::move(label));
}

Lattice load_lattice(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NumericalError(ErrorKind::InvalidArgument, "cannot open " + path.string());
  return parse_lattice(in, path.stem().string());
}

LatticeFunctionPair gaussian_pair(int dimension, double t) {
  if (dimension < 1 || !(t > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "invalid Gaussian pair");
  const double amp = std::pow(t, -0.5 * dimension);
  LatticeFunctionPair p;
  p.label = "gaussian";
  p.f = [t](const Eigen::VectorXd& x) { return cplx(std::exp(-pi * t * x.squaredNorm())); };
  p.f_hat = [t, amp](const Eigen::VectorXd& y) { return cplx(amp * std::exp(-pi * y.squaredNorm() / t)); };
  p.decay = pi * t;
  p.hat_decay = pi / t;
  p.hat_envelope = amp;
  return p;
}

LatticeFunctionPair complex_gaussian_pair(const UpperHalfPoint& z) {
  LatticeFunctionPair p;
  p.label = "complex-gaussian";
  const cplx zv = z.value();
  p.f = [zv](const Eigen::VectorXd& x) { return std::exp(pi * kI * zv * x.squaredNorm()); };
  p.f_hat = [z](const Eigen::VectorXd& y) { return complex_gaussian_transform(z, y.norm()); };
  p.decay = pi * z.im();
  p.hat_decay = pi * (-1.0 / zv).imag();
  p.hat_envelope = 1.0 / std::abs(sqrt_neg_iz(z));
  return p;
}

namespace {

// envelope / covolume * int_{R - mu}^inf S_{n-1} rho^{n-1} e^{-decay rho^2} d rho,
// mu = sqrt(sum |b*_i|^2) / 2 over the Gram-Schmidt lengths (a covering-radius bound).
double gaussian_tail(const Lattice& lattice, double radius, double decay, double envelope) {
  const int n = lattice.dimension();
  const Eigen::MatrixXd u = Eigen::LLT<Eigen::MatrixXd>(lattice.gram()).matrixU();
  const double mu = 0.5 * u.diagonal().norm();
  const double start = std::max(0.0, radius - mu);
  const double sphere = 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
  const double stop = start + std::sqrt((double(n) + 80.0) / decay);
  AdaptiveOptions ao;
  ao.abs_tol = 1e-30;
  ao.throw_on_failure = false;
  ao.initial_panels = 16;
  const QuadratureResult q = integrate_interval(
      [&](double rho) { return cplx(sphere * std::pow(rho, n - 1) * std::exp(-decay * rho * rho)); }, start, stop, ao);
  return envelope / lattice.covolume() * q.value.real();
}

}  // namespace

PoissonReport poisson_check(const LatticeFunctionPair& pair, const Lattice& lattice, double radius_budget,
                            const EnumerationOptions& opts) {
  const Lattice dual = dual_lattice(lattice);
  const std::vector<Eigen::VectorXd> primal_vecs = short_vectors(lattice, radius_budget, opts);
  const std::vector<Eigen::VectorXd> dual_vecs = short_vectors(dual, radius_budget, opts);
  PoissonReport r;
  r.lhs = 0.0;
  for (const auto& v : primal_vecs) r.lhs += pair.f(v);
  cplx dual_sum = 0.0;
  for (const auto& v : dual_vecs) dual_sum += pair.f_hat(v);
  r.rhs = dual_sum / lattice.covolume();
  r.residual = std::abs(r.lhs - r.rhs);
  r.lhs_terms = primal_vecs.size();
  r.rhs_terms = dual_vecs.size();
  r.lhs_tail_bound = pair.decay > 0.0 ? gaussian_tail(lattice, radius_budget, pair.decay, pair.envelope) : 0.0;
  r.rhs_tail_bound = pair.hat_decay > 0.0
                         ? gaussian_tail(dual, radius_budget, pair.hat_decay, pair.hat_envelope) / lattice.covolume()
                         : 0.0;
  return r;
}

double ball_volume(int n, double radius) {
  if (n < 1 || !(radius > 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "ball volume needs n >= 1, r > 0");
  return std::pow(pi, 0.5 * n) * std::pow(radius, n) / std::tgamma(0.5 * n + 1.0);
}

DensityReport lattice_packing_density(const Lattice& lattice, const EnumerationOptions& opts) {
  double shortest_row = INFINITY;
  for (int i = 0; i < lattice.dimension(); ++i) shortest_row = std::min(shortest_row, lattice.basis().row(i).norm());
  double min_len = shortest_row;
  for (const auto& v : short_vectors(lattice, shortest_row * (1.0 + 1e-9), opts)) {
    const double len = v.norm();
    if (len > 1e-9) min_len = std::min(min_len, len);
  }
  return {min_len, lattice.covolume(), ball_volume(lattice.dimension(), 0.5 * min_len) / lattice.covolume()};
}

CertificateOutcome lp_certificate_check(const LPCertificate& c, double slack) {
  CertificateOutcome out;
  for (double s : c.sign_grid) {
    if (s < c.r) continue;
    const double v = c.f(s);
    if (v > slack) {
      out.violated_condition = 1;
      out.radius = s;
      out.value = v;
      return out;
    }
  }
  for (double s : c.positivity_grid) {
    const double v = c.f_hat(s);
    if (v < -slack) {
      out.violated_condition = 2;
      out.radius = s;
      out.value = v;
      return out;
    }
  }
  const double f0 = c.f(0.0), g0 = c.f_hat(0.0);
  if (std::fabs(f0 - 1.0) > slack || std::fabs(g0 - 1.0) > slack) {
    out.violated_condition = 3;
    out.value = std::fabs(f0 - 1.0) > slack ? f0 : g0;
    return out;
  }
  out.passed = true;
  out.bound = ball_volume(c.dimension, 0.5 * c.r);
  return out;
}

namespace {

std::vector<double> grid_between(double from, double to, double spacing) {
  std::vector<double> g;
  const long count = long(std::floor((to - from) / spacing + 1e-9));
  for (long k = 0; k <= count; ++k) g.push_back(from + double(k) * spacing);
  return g;
}

// Unit vectors along every nonzero element of {-1, 0, 1}^n.
std::vector<Eigen::VectorXd> probe_directions(int n) {
  std::vector<Eigen::VectorXd> dirs;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    Eigen::VectorXd v(n);
    long rest = code;
    for (int i = 0; i < n; ++i) {
      v(i) = double(rest % 3) - 1.0;
      rest /= 3;
    }
    if (v.squaredNorm() > 0.0) dirs.push_back(v.normalized());
  }
  if (n == 2) {
    for (int k = 0; k < 720; ++k) dirs.push_back(Eigen::Vector2d(std::cos(k * pi / 360.0), std::sin(k * pi / 360.0)));
  }
  return dirs;
}

}  // namespace

LPCertificate triangle_certificate(double r, double spacing, double r_max) {
  LPCertificate c;
  c.label = "triangle";
  c.f = [](double x) { return std::max(0.0, 1.0 - std::fabs(x)); };
  c.f_hat = [](double y) {
    const double s = sinc(y);
    return s * s;
  };
  c.r = r;
  c.dimension = 1;
  c.sign_grid = grid_between(r, r_max, spacing);
  c.positivity_grid = grid_between(0.0, r_max, spacing);
  c.f_vec = [f = c.f](const Eigen::VectorXd& x) { return f(x(0)); };
  c.f_hat_vec = [g = c.f_hat](const Eigen::VectorXd& y) { return g(y(0)); };
  return c;
}

LPCertificate product_triangle_certificate(int dimension, double r, double spacing, double r_max) {
  if (dimension < 1 || dimension > 8) throw NumericalError(ErrorKind::InvalidArgument, "product certificate needs 1 <= n <= 8");
  LPCertificate c;
  c.label = "product-triangle";
  c.dimension = dimension;
  c.r = r;
  c.f_vec = [](const Eigen::VectorXd& x) {
    double p = 1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) p *= std::max(0.0, 1.0 - std::fabs(x(i)));
    return p;
  };
  c.f_hat_vec = [](const Eigen::VectorXd& y) {
    double p = 1.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) p *= sinc(y(i)) * sinc(y(i));
    return p;
  };
  // Radial views: the largest f and the smallest f^ over probe directions.
  auto dirs = std::make_shared<std::vector<Eigen::VectorXd>>(probe_directions(dimension));
  c.f = [dirs, fv = c.f_vec](double s) {
    double best = -INFINITY;
    for (const auto& u : *dirs) best = std::max(best, fv(s * u));
    return best;
  };
  c.f_hat = [dirs, gv = c.f_hat_vec](double s) {
    double worst = INFINITY;
    for (const auto& u : *dirs) worst = std::min(worst, gv(s * u));
    return worst;
  };
  c.sign_grid = grid_between(r, r_max, spacing);
  c.positivity_grid = grid_between(0.0, r_max, spacing);
  return c;
}

LPCertificate gaussian_certificate(int dimension, double r, double spacing, double r_max) {
  LPCertificate c;
  c.label = "gaussian";
  c.dimension = dimension;
  c.r = r;
  c.f = [](double s) { return std::exp(-pi * s * s); };
  c.f_hat = c.f;
  c.f_vec = [](const Eigen::VectorXd& x) { return std::exp(-pi * x.squaredNorm()); };
  c.f_hat_vec = c.f_vec;
  c.sign_grid = grid_between(r, r_max, spacing);
  c.positivity_grid = grid_between(0.0, r_max, spacing);
  return c;
}

SharpnessGap lp_bound_sharpness_gap(const Lattice& lattice, const LPCertificate& c, double radius,
                                    const EnumerationOptions& opts) {
  if (lattice.dimension() != c.dimension) {
    throw NumericalError(ErrorKind::ShapeMismatch, "certificate and lattice dimensions differ");
  }
  const DensityReport base = lattice_packing_density(lattice, opts);
  SharpnessGap gap;
  gap.scale = c.r / base.minimal_length;
  const Lattice scaled = lattice.scaled(gap.scale);
  auto f = [&](const Eigen::VectorXd& v) { return c.f_vec ? c.f_vec(v) : c.f(v.norm()); };
  auto g = [&](const Eigen::VectorXd& v) { return c.f_hat_vec ? c.f_hat_vec(v) : c.f_hat(v.norm()); };
  gap.dropped_f = 0.0;
  for (const auto& v : short_vectors(scaled, radius, opts)) {
    if (v.norm() > 1e-9) gap.dropped_f += std::fabs(f(v));
  }
  gap.dropped_f_hat = 0.0;
  for (const auto& v : short_vectors(dual_lattice(scaled), radius, opts)) {
    if (v.norm() > 1e-9) gap.dropped_f_hat += g(v);
  }
  gap.slack = 1.0 - 1.0 / scaled.covolume();
  gap.density = base.density;
  gap.bound = ball_volume(c.dimension, 0.5 * c.r);
  return gap;
}

}  // namespace fourier_interp
