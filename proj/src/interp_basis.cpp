#include "fourier_interp/interp_basis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace fourier_interp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return unsigned(std::min<std::size_t>(n, std::max<std::size_t>(1, jobs)));
}

// Runs body(i) for i in [0, count) on a fixed strided partition; each index
// writes only its own output slot.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  const unsigned workers = worker_count(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<double> angle_breakpoints(double max_panel, int levels) {
  std::vector<double> half{0.0};
  for (int k = levels; k >= 1; --k) half.push_back(pi / 2.0 * std::ldexp(1.0, -k));
  half.push_back(pi / 2.0);
  std::vector<double> refined{0.0};
  for (std::size_t i = 0; i + 1 < half.size(); ++i) {
    const double a = half[i], b = half[i + 1];
    const int pieces = std::max(1, int(std::ceil((b - a) / max_panel)));
    for (int j = 1; j <= pieces; ++j) refined.push_back(a + (b - a) * j / pieces);
  }
  std::vector<double> full = refined;
  for (auto it = refined.rbegin() + 1; it != refined.rend(); ++it) full.push_back(pi - *it);
  return full;
}

cplx inverse_sqrt_neg_iu(cplx u) { return 1.0 / std::sqrt(cplx(u.imag(), -u.real())); }

}  // namespace

QuadratureResult a0_on(const Contour& path, double x, double abs_tol) {
  const double x2 = x * x;
  return integrate(
      [x2](cplx z) {
        const cplx t = theta_triple(z).theta3;
        return 0.25 * t * t * t * std::exp(pi * kI * z * x2);
      },
      path, abs_tol);
}

double a0(double x, double abs_tol) {
  if (!(x >= 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "a0 needs x >= 0");
  const QuadratureResult q = a0_on(x <= 1.5 ? semicircle() : polygon_contour(), x, abs_tol);
  return q.value.real();
}

std::vector<long long> theta_cubed_coefficients(int max_m) {
  if (max_m < 0) return {};
  std::vector<long long> r(max_m + 1, 0);
  const int bound = int(std::floor(std::sqrt(double(max_m)))) + 1;
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      for (int c = -bound; c <= bound; ++c) {
        const int m = a * a + b * b + c * c;
        if (m <= max_m) ++r[m];
      }
    }
  }
  return r;
}

BasisEngine::BasisEngine(BasisEngineOptions opts) : opts_(std::move(opts)), sampler_(opts_.sampler) {
  if (opts_.max_n < 0 || !(opts_.max_panel_angle > 0.0) || opts_.grading_levels < 0) {
    throw NumericalError(ErrorKind::InvalidArgument, "invalid basis engine options");
  }
  const std::vector<double> breaks = angle_breakpoints(opts_.max_panel_angle, opts_.grading_levels);
  for (auto [grid, order] : {std::pair<Grid*, int>{&grid32_, 32}, std::pair<Grid*, int>{&grid16_, 16}}) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
      const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
      const double half = 0.5 * (breaks[p + 1] - breaks[p]);
      for (int i = 0; i < order; ++i) {
        const double phi = mid + half * rule.nodes[i];
        const cplx z = std::polar(1.0, phi);
        // The path runs from phi = pi down to 0.
        grid->nodes.push_back({z, -half * rule.weights[i] * kI * z, 0.0, 0.0});
      }
    }
    tabulate(*grid);
  }
}

void BasisEngine::tabulate(Grid& grid) const {
  const Eigen::Index rows = opts_.max_n + 1, cols = Eigen::Index(grid.nodes.size());
  grid.psi[0].resize(rows, cols);
  grid.psi[1].resize(rows, cols);
  parallel_for(grid.nodes.size(), opts_.threads, [&](std::size_t k) {
    Node& node = grid.nodes[k];
    const ModularPoint zp = modular_point(node.z);
    for (int h = 0; h < 2; ++h) {
      double scale = 0.0, level = 0.0;
      const std::vector<cplx> psi = sampler_.regular_coefficients(h ? KernelKind::hat : KernelKind::plain, zp,
                                                                  opts_.max_n, &scale, &level);
      for (Eigen::Index n = 0; n < rows; ++n) grid.psi[h](n, Eigen::Index(k)) = psi[n];
      node.level = std::max(node.level, level);
      node.sample_scale = std::max(node.sample_scale, scale);
    }
  });
}

Eigen::VectorXcd BasisEngine::regular_row(const Grid& grid, bool hat, double x) const {
  Eigen::VectorXcd w(Eigen::Index(grid.nodes.size()));
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    w(Eigen::Index(k)) = grid.nodes[k].weight * std::exp(pi * kI * grid.nodes[k].z * (x * x));
  }
  return grid.psi[hat ? 1 : 0] * w;
}

Eigen::VectorXd BasisEngine::noise_row(const Grid& grid, double x) const {
  // Rounding in the line samples is amplified by e^{n pi H} in psi_n.
  Eigen::VectorXd noise = Eigen::VectorXd::Zero(opts_.max_n + 1);
  for (const Node& node : grid.nodes) {
    const double base = std::abs(node.weight) * std::exp(-pi * node.z.imag() * x * x) * node.sample_scale * 8.0 * kEps;
    for (int n = 0; n <= opts_.max_n; ++n) noise(n) += base * std::exp(double(n) * pi * node.level);
  }
  return noise;
}

cplx BasisEngine::closed_part(int n, bool hat, double x, double* err) const {
  const double x2 = x * x;
  if (!hat) {
    *err = 0.0;
    return n == 0 ? cplx(0.5 * sinc(x2)) : cplx(sinc(x2 - double(n)));
  }
  // c_n int (-iu)^{-1/2} e^{-n pi i u} e^{-pi i x^2 / u} du from -1 to 1,
  // along the real axis except for an arc of radius r around 0.
  const double c = n == 0 ? 0.25 : 0.5;
  const double r = n == 0 ? 0.5 : std::clamp(x / std::sqrt(double(n)), 0.05, 0.9);
  auto integrand = [&](cplx u) {
    return inverse_sqrt_neg_iu(u) * std::exp(-double(n) * pi * kI * u - pi * kI * x2 / u);
  };
  AdaptiveOptions ao;
  ao.abs_tol = opts_.closed_part_tol / 3.0;
  ao.min_panel = 1e-6;
  ao.max_panels = 100000;
  ao.initial_panels = std::max(1, n / 2);
  ao.throw_on_failure = false;
  const QuadratureResult left = integrate_interval([&](double u) { return integrand(u); }, -1.0, -r, ao);
  const QuadratureResult right = integrate_interval([&](double u) { return integrand(u); }, r, 1.0, ao);
  ao.initial_panels = 4;
  const QuadratureResult arc = integrate_interval(
      [&](double psi) {
        const cplx u = std::polar(r, psi);
        return integrand(u) * kI * u;
      },
      pi, 0.0, ao);
  *err = c * (left.error_estimate + right.error_estimate + arc.error_estimate);
  return c * (left.value + right.value + arc.value);
}

BasisValue BasisEngine::value(int n, bool hat, double x) const {
  if (n < 0 || n > opts_.max_n) throw NumericalError(ErrorKind::IndexOutOfRange, "basis index outside the engine");
  if (!(x >= 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "basis functions need x >= 0");
  return values(hat, x)[n];
}

std::vector<BasisValue> BasisEngine::values(bool hat, double x) const {
  if (!(x >= 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "basis functions need x >= 0");
  const Eigen::VectorXcd hi = regular_row(grid32_, hat, x);
  const Eigen::VectorXcd lo = regular_row(grid16_, hat, x);
  const Eigen::VectorXd noise = noise_row(grid32_, x);
  std::vector<BasisValue> out(opts_.max_n + 1);
  for (int n = 0; n <= opts_.max_n; ++n) {
    double closed_err = 0.0;
    const cplx v = hi(n) + closed_part(n, hat, x, &closed_err);
    out[n] = {v.real(), v.imag(), std::abs(hi(n) - lo(n)) + noise(n) + closed_err};
  }
  return out;
}

std::pair<double, double> BasisEngine::tail_envelope() const {
  std::call_once(envelope_once_, [this] {
    const int top = std::min(12, opts_.max_n);
    if (top < 1) return;
    Eigen::VectorXd peak = Eigen::VectorXd::Zero(top + 1);
    for (double x : make_grid(0.0, 3.0, 0.1)) {
      for (bool hat : {false, true}) {
        const std::vector<BasisValue> row = values(hat, x);
        for (int n = 0; n <= top; ++n) peak(n) = std::max(peak(n), std::fabs(row[n].value));
      }
    }
    // Least squares for log peak = log C + k log(1 + n), then C raised to dominate.
    Eigen::MatrixXd design(top + 1, 2);
    Eigen::VectorXd rhs(top + 1);
    for (int n = 0; n <= top; ++n) {
      design(n, 0) = 1.0;
      design(n, 1) = std::log1p(double(n));
      rhs(n) = std::log(std::max(peak(n), 1e-300));
    }
    const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(rhs);
    const double k = std::max(0.0, fit(1));
    double c = std::exp(fit(0));
    for (int n = 0; n <= top; ++n) c = std::max(c, peak(n) / std::pow(1.0 + n, k));
    envelope_ = {c, k};
  });
  return envelope_;
}

const BasisEngine& default_basis_engine() {
  static const BasisEngine engine{};
  return engine;
}

double basis_value(int n, bool hat, double x, double abs_tol) {
  const BasisEngine& base = default_basis_engine();
  BasisValue v;
  if (n <= base.max_n()) {
    v = base.value(n, hat, x);
  } else {
    BasisEngineOptions opts;
    opts.max_n = n;
    v = BasisEngine(opts).value(n, hat, x);
  }
  if (v.error_estimate > abs_tol) {
    throw NumericalError(ErrorKind::ToleranceUnreachable, "basis value error estimate exceeds abs_tol");
  }
  return v.value;
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw NumericalError(ErrorKind::InvalidArgument, "grid needs step > 0 and stop >= start");
  }
  const long count = long(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> grid;
  grid.reserve(std::size_t(count));
  for (long k = 0; k < count; ++k) grid.push_back(start + double(k) * step);
  return grid;
}

BasisTable build_basis_table(const BasisEngine& engine, const std::vector<double>& x_grid) {
  BasisTable t;
  t.max_n = engine.max_n();
  t.x_grid = x_grid;
  const Eigen::Index rows = t.max_n + 1, cols = Eigen::Index(x_grid.size());
  t.a.resize(rows, cols);
  t.a_hat.resize(rows, cols);
  t.err_a.resize(rows, cols);
  t.err_ahat.resize(rows, cols);
  Eigen::VectorXd imag_peak = Eigen::VectorXd::Zero(cols);
  parallel_for(x_grid.size(), engine.options().threads, [&](std::size_t j) {
    const Eigen::Index c = Eigen::Index(j);
    const std::vector<BasisValue> a = engine.values(false, x_grid[j]);
    const std::vector<BasisValue> ah = engine.values(true, x_grid[j]);
    for (Eigen::Index n = 0; n < rows; ++n) {
      t.a(n, c) = a[n].value;
      t.err_a(n, c) = a[n].error_estimate;
      t.a_hat(n, c) = ah[n].value;
      t.err_ahat(n, c) = ah[n].error_estimate;
      imag_peak(c) = std::max({imag_peak(c), std::fabs(a[n].imag), std::fabs(ah[n].imag)});
    }
  });
  t.max_imag = cols ? imag_peak.maxCoeff() : 0.0;
  return t;
}

BasisTable build_basis_table(int max_n, const std::vector<double>& x_grid) {
  BasisEngineOptions opts;
  opts.max_n = max_n;
  return build_basis_table(BasisEngine(opts), x_grid);
}

double BasisTable::node_deviation() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < x_grid.size(); ++j) {
    const double m = std::round(x_grid[j] * x_grid[j]);
    if (m < 1.0 || m > double(max_n) || std::fabs(x_grid[j] * x_grid[j] - m) > 1e-9) continue;
    for (int n = 1; n <= max_n; ++n) {
      const double delta = (double(n) == m) ? 1.0 : 0.0;
      worst = std::max({worst, std::fabs(a(n, Eigen::Index(j)) - delta), std::fabs(a_hat(n, Eigen::Index(j)))});
    }
  }
  return worst;
}

cplx generating_F(bool hat, const UpperHalfPoint& tau, double x, double abs_tol) {
  if (!in_region_S(tau)) throw NumericalError(ErrorKind::OutsideRegionS, "generating function needs tau in S");
  const ModularPoint t = modular_point(tau.value());
  const KernelKind kind = hat ? KernelKind::hat : KernelKind::plain;
  const double x2 = x * x;
  return integrate([&](cplx z) { return kernel(kind, t, modular_point(z)) * std::exp(pi * kI * z * x2); },
                   semicircle(), abs_tol)
      .value;
}

FunctionalEquationReport gaussian_functional_equation(const UpperHalfPoint& tau, double x, int truncation_N,
                                                      const BasisEngine& engine) {
  if (truncation_N < 1 || truncation_N > engine.max_n()) {
    throw NumericalError(ErrorKind::InvalidArgument, "truncation_N must lie in [1, engine max_n]");
  }
  FunctionalEquationReport r;
  r.direct_F = generating_F(false, tau, x);
  const cplx w = -1.0 / tau.value();
  const std::vector<BasisValue> row = engine.values(true, x);
  r.hat_sum = 0.0;
  for (int n = 0; n <= truncation_N; ++n) r.hat_sum += row[n].value * std::exp(double(n) * pi * kI * w);
  r.gaussian = std::exp(pi * kI * tau.value() * x * x);
  r.residual = std::abs(r.direct_F + r.hat_sum / sqrt_neg_iz(tau) - r.gaussian);
  return r;
}

double gaussian_functional_equation_residual(const UpperHalfPoint& tau, double x, int truncation_N,
                                             const BasisEngine& engine) {
  return gaussian_functional_equation(tau, x, truncation_N, engine).residual;
}

ReconstructionReport reconstruct(const TransformPair& f, double x, int truncation_N, const BasisEngine& engine) {
  if (truncation_N < 1 || truncation_N > engine.max_n()) {
    throw NumericalError(ErrorKind::InvalidArgument, "truncation_N must lie in [1, engine max_n]");
  }
  if (!(x >= 0.0)) throw NumericalError(ErrorKind::InvalidArgument, "reconstruction needs x >= 0");
  const std::vector<BasisValue> a = engine.values(false, x);
  const std::vector<BasisValue> ah = engine.values(true, x);
  double sum = 0.0;
  for (int n = 0; n <= truncation_N; ++n) {
    const double root = std::sqrt(double(n));
    sum += f.f(root).real() * a[n].value;
    sum += f.f_hat(root).real() * ah[n].value;
  }
  const auto [c, k] = engine.tail_envelope();
  double tail = 0.0;
  for (int n = truncation_N + 1; n <= truncation_N + 400; ++n) {
    const double root = std::sqrt(double(n));
    tail += (std::abs(f.f(root)) + std::abs(f.f_hat(root))) * c * std::pow(1.0 + n, k);
  }
  const double reference = f.f(x).real();
  return {x, truncation_N, sum, reference, std::fabs(sum - reference), tail};
}

double poisson_redundancy_residual(const TransformPair& f, int cutoff) {
  if (cutoff < 1) throw NumericalError(ErrorKind::InvalidArgument, "cutoff must be positive");
  cplx lhs = f.f(0.0), rhs = f.f_hat(0.0);
  for (int k = 1; k <= cutoff; ++k) {
    lhs += 2.0 * f.f(double(k));
    rhs += 2.0 * f.f_hat(double(k));
  }
  return std::abs(lhs - rhs);
}

ResidueDemonstration residue_demonstration(const UpperHalfPoint& tau, double x, double abs_tol) {
  const ModularPoint t = modular_point(tau.value());
  const double x2 = x * x;
  auto integrand = [&](cplx z) { return kernel(KernelKind::plain, t, modular_point(z)) * std::exp(pi * kI * z * x2); };
  const QuadratureResult below = integrate(integrand, pole_avoiding_contour(tau, PoleSide::below_tau), abs_tol);
  const QuadratureResult above = integrate(integrand, detour_contour(tau.value(), false, 0.05), abs_tol);
  ResidueDemonstration r;
  r.below = below.value;
  r.above = above.value;
  r.difference = below.value - above.value;
  r.expected = std::exp(pi * kI * tau.value() * x2);
  r.residual = std::abs(r.difference - r.expected);
  r.error_estimate = below.error_estimate + above.error_estimate;
  return r;
}

}  // namespace fourier_interp
