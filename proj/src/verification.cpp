#include "fourier_interp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "json.hpp"

#include "fourier_interp/classical_interp.hpp"
#include "fourier_interp/interp_basis.hpp"
#include "fourier_interp/kernels.hpp"
#include "fourier_interp/lattice_lp.hpp"
#include "fourier_interp/table_io.hpp"

namespace fourier_interp {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string SuiteReport::first_failure() const {
  for (const Check& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

void SuiteReport::expect_below(std::string name, double measured, double threshold) {
  checks.push_back({std::move(name), measured, threshold, measured < threshold, "below"});
}

void SuiteReport::expect_above(std::string name, double measured, double threshold) {
  checks.push_back({std::move(name), measured, threshold, measured > threshold, "above"});
}

void SuiteReport::note(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }

void SuiteReport::note(std::string key, double value) { note(std::move(key), format_real(value)); }

namespace {

std::string complex_text(cplx v) {
  return format_real(v.real()) + (v.imag() < 0 ? "" : "+") + format_real(v.imag()) + "i";
}

std::string label_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

UpperHalfPoint random_point(std::mt19937_64& rng, double re_lo, double re_hi, double im_lo, double im_hi) {
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(im_lo, im_hi);
  const double x = re(rng);
  return UpperHalfPoint(x, im(rng));
}

}  // namespace

SuiteReport verify_theta(const SuiteOptions& opts) {
  SuiteReport r{"theta", {}, {}};
  std::mt19937_64 rng(opts.seed);
  double trans = 0, inv = 0, lam_t = 0, lam_i = 0, h_i = 0, j_t = 0, j_i = 0, jacobi = 0, sq = 0;
  for (int k = 0; k < 200; ++k) {
    const UpperHalfPoint z = random_point(rng, -1.0, 1.0, 0.2, 5.0);
    const cplx t = theta3(z);
    const cplx s = sqrt_neg_iz(z);
    trans = std::max(trans, std::abs(theta3(z.shifted(2.0)) - t) / (1.0 + std::abs(t)));
    inv = std::max(inv, std::abs(theta3(z.inverted()) - s * t) / (1.0 + std::abs(t)));
    const cplx lam = lambda_modular(z);
    lam_t = std::max(lam_t, std::abs(lambda_modular(z.shifted(2.0)) - lam) / (1.0 + std::abs(lam)));
    lam_i = std::max(lam_i, std::abs(lambda_modular(z.inverted()) - (1.0 - lam)) / (1.0 + std::abs(lam)));
    const cplx h = h_function(z);
    h_i = std::max(h_i, std::abs(h_function(z.inverted()) + h) / (1.0 + std::abs(h)));
    const cplx j = hauptmodul_J(z);
    j_t = std::max(j_t, std::abs(hauptmodul_J(z.shifted(2.0)) - j) / (1.0 + std::abs(j)));
    j_i = std::max(j_i, std::abs(hauptmodul_J(z.inverted()) - j) / (1.0 + std::abs(j)));
    const cplx t2 = std::pow(theta2(z), 4), t4 = std::pow(theta4(z), 4), t34 = std::pow(t, 4);
    jacobi = std::max(jacobi, std::abs(t2 + t4 - t34) / std::max(1e-300, std::abs(t34)));
    sq = std::max(sq, std::abs(s * s + kI * z.value()) / std::abs(z.value()));
  }
  r.expect_below("theta_translation", trans, 1e-11);
  r.expect_below("theta_inversion", inv, 1e-10);
  r.expect_below("lambda_translation", lam_t, 1e-10);
  r.expect_below("lambda_inversion", lam_i, 1e-10);
  r.expect_below("h_inversion", h_i, 1e-10);
  r.expect_below("J_translation", j_t, 1e-10);
  r.expect_below("J_inversion", j_i, 1e-10);
  r.expect_below("jacobi_identity", jacobi, 1e-10);
  r.expect_below("sqrt_neg_iz_square", sq, 4e-15);

  // Branch continuity along a path through i.
  double jump = 0.0;
  cplx prev = sqrt_neg_iz(UpperHalfPoint(-0.99, 0.05));
  for (int k = 1; k <= 2000; ++k) {
    const double s = double(k) / 2000.0;
    // Piecewise-linear path -0.99+0.05i -> i -> 0.99+0.05i.
    const cplx p = s < 0.5 ? cplx(-0.99, 0.05) + 2.0 * s * (kI - cplx(-0.99, 0.05))
                           : kI + (2.0 * s - 1.0) * (cplx(0.99, 0.05) - kI);
    const cplx v = sqrt_neg_iz(UpperHalfPoint(p));
    jump = std::max(jump, std::abs(v - prev));
    prev = v;
  }
  r.expect_below("sqrt_neg_iz_continuity", jump, 0.01);

  const Lattice z1 = lattice_fixture("z1");
  double replay = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const UpperHalfPoint z(0.0, t);
    const PoissonReport p = poisson_check(complex_gaussian_pair(z), z1, 8.0);
    const double direct_lhs = std::abs(p.lhs - theta3(z));
    const double direct_rhs = std::abs(p.rhs - theta3(z.inverted()) / sqrt_neg_iz(z));
    replay = std::max({replay, direct_lhs, direct_rhs, p.residual});
  }
  r.expect_below("poisson_theta_replay", replay, 1e-10);
  r.note("theta3(i)", complex_text(theta3(UpperHalfPoint(0.0, 1.0))));
  return r;
}

SuiteReport verify_kernels(const SuiteOptions& opts) {
  SuiteReport r{"kernels", {}, {}};
  std::mt19937_64 rng(opts.seed + 1);
  double laws[2][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  double jform = 0.0;
  int pairs = 0;
  while (pairs < 50) {
    const UpperHalfPoint tau = random_point(rng, -1.0, 1.0, 0.4, 2.5);
    const UpperHalfPoint z = random_point(rng, -1.0, 1.0, 0.4, 2.5);
    if (kernel_denominator(KernelKind::plain, tau, z) < 1e-2 || kernel_denominator(KernelKind::hat, tau, z) < 1e-2) {
      continue;
    }
    ++pairs;
    for (KernelKind kind : {KernelKind::plain, KernelKind::hat}) {
      const int k = kind == KernelKind::plain ? 0 : 1;
      const TransformationResiduals zr = verify_z_transformations(kind, tau, z);
      const TransformationResiduals tr = verify_tau_transformations(kind, tau, z);
      laws[k][0] = std::max(laws[k][0], zr.translation / zr.scale);
      laws[k][1] = std::max(laws[k][1], zr.inversion / zr.scale);
      laws[k][2] = std::max(laws[k][2], tr.translation / tr.scale);
      laws[k][3] = std::max(laws[k][3], tr.inversion / tr.scale);
      const cplx hk = kernel(kind, tau, z);
      jform = std::max(jform, std::abs(kernel_j_form(kind, tau, z) - hk) / std::max(1.0, std::abs(hk)));
    }
  }
  const char* names[4] = {"z_translation", "z_inversion", "tau_translation", "tau_inversion"};
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 4; ++l) {
      r.expect_below(std::string(k == 0 ? "K_" : "Khat_") + names[l], laws[k][l], 1e-9);
    }
  }
  r.expect_below("h_form_vs_J_form", jform, 1e-9);

  const UpperHalfPoint tau(0.3, 1.1);
  const UpperHalfPoint neg_inv = tau.inverted();
  const cplx expected = 1.0 / (2.0 * pi * kI);
  const ResidueReport r05 = residue_at(KernelKind::plain, tau, tau, 0.05);
  const ResidueReport r10 = residue_at(KernelKind::plain, tau, tau, 0.1);
  r.expect_below("residue_K_at_tau", std::abs(r05.residue - expected), 1e-8);
  r.expect_below("residue_radius_independence", std::abs(r05.residue - r10.residue), 1e-7);
  r.expect_below("residue_K_at_neg_inv_tau", std::abs(residue_at(KernelKind::plain, tau, neg_inv, 0.05).residue), 1e-8);
  r.expect_below("residue_Khat_at_tau", std::abs(residue_at(KernelKind::hat, tau, tau, 0.05).residue), 1e-8);
  r.note("residue_K_at_tau", complex_text(r05.residue));
  r.note("residue_Khat_at_neg_inv_tau", complex_text(residue_at(KernelKind::hat, tau, neg_inv, 0.05).residue));

  // Bounded (z - p) K as the circle shrinks: the residue estimate is stable.
  const double shrink = std::abs(residue_at(KernelKind::plain, tau, tau, 0.01).residue - r05.residue);
  r.expect_below("residue_small_circle_stability", shrink, 1e-7);

  // Poles sit on Gamma(2) tau for K and on Gamma(2)(-1/tau) for K^.
  const Mobius s{0, -1, 1, 0};
  double orbit_denominator = 0.0;
  int orbit_points = 0;
  for (const OrbitPoint& o : gamma_theta_orbit_words(tau, 3)) {
    if (o.point.im() < 0.05 || std::abs(h_function(o.point)) > 1e3) continue;
    const KernelKind kind = o.word.in_gamma2() ? KernelKind::plain : KernelKind::hat;
    if (kind == KernelKind::hat && !(o.word * s).in_gamma2()) continue;
    orbit_denominator = std::max(orbit_denominator, kernel_denominator(kind, tau, o.point));
    ++orbit_points;
  }
  r.expect_below("orbit_pole_denominator", orbit_denominator, 1e-8);
  r.note("orbit_points_checked", double(orbit_points));

  const std::vector<UpperHalfPoint> orbit = gamma_theta_orbit(tau, 3);
  int nonfinite = 0, off_orbit = 0;
  while (off_orbit < 20) {
    const UpperHalfPoint z = random_point(rng, -1.0, 1.0, 0.3, 2.0);
    const bool near = std::any_of(orbit.begin(), orbit.end(),
                                  [&](const UpperHalfPoint& p) { return std::abs(p.value() - z.value()) < 1e-3; });
    if (near) continue;
    ++off_orbit;
    for (KernelKind kind : {KernelKind::plain, KernelKind::hat}) {
      const cplx v = kernel(kind, modular_point(tau.value()), modular_point(z.value()));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) ++nonfinite;
    }
  }
  r.expect_below("off_orbit_nonfinite_values", double(nonfinite), 0.5);
  return r;
}

SuiteReport verify_interpolation(const SuiteOptions& opts) {
  SuiteReport r{"interpolation", {}, {}};
  const BasisEngine& engine = default_basis_engine();

  r.expect_below("a0_at_0", std::fabs(a0(0.0) - 0.5), 1e-6);
  double a0_nodes = 0.0;
  for (int m = 1; m <= 8; ++m) a0_nodes = std::max(a0_nodes, std::fabs(a0(std::sqrt(double(m)))));
  r.expect_below("a0_at_sqrt_m", a0_nodes, 1e-5);
  double routes = 0.0;
  for (double x = 0.5; x <= 1.5 + 1e-12; x += 0.1) {
    const double semi = a0_on(semicircle(), x).value.real();
    const double poly = a0_on(polygon_contour(), x).value.real();
    routes = std::max(routes, std::fabs(semi - poly));
  }
  r.expect_below("a0_semicircle_vs_polygon", routes, 1e-6);

  double node = 0.0, hat_node = 0.0, origin = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const double x = std::sqrt(double(m));
      node = std::max(node, std::fabs(engine.value(n, false, x).value - (n == m ? 1.0 : 0.0)));
      hat_node = std::max(hat_node, std::fabs(engine.value(n, true, x).value));
    }
    origin = std::max(origin, std::fabs(engine.value(n, false, 0.0).value + engine.value(n, true, 0.0).value));
  }
  r.expect_below("node_matrix", node, 1e-4);
  r.expect_below("hat_node_matrix", hat_node, 1e-4);
  r.expect_below("origin_sum", origin, 1e-4);

  double self_dual = 0.0, imag = 0.0;
  for (double x : make_grid(0.0, 3.0, 0.05)) {
    const BasisValue v = engine.value(0, false, x), w = engine.value(0, true, x);
    self_dual = std::max(self_dual, std::fabs(v.value - w.value));
    for (int n = 0; n <= 12; ++n) {
      imag = std::max({imag, std::fabs(engine.value(n, false, x).imag), std::fabs(engine.value(n, true, x).imag)});
    }
  }
  r.expect_below("row0_self_duality", self_dual, 1e-5);
  r.expect_below("imaginary_parts", imag, 1e-8);

  // F(tau, x) = sum_n a_n(x) e^{pi i n tau} at Im tau = 3.
  double gen = 0.0;
  const UpperHalfPoint high(0.2, 3.0);
  for (double x : {0.0, 0.7, 1.3}) {
    cplx sum = 0.0;
    const std::vector<BasisValue> row = engine.values(false, x);
    for (int n = 0; n <= 20; ++n) sum += row[n].value * std::exp(double(n) * pi * kI * high.value());
    gen = std::max(gen, std::abs(generating_F(false, high, x) - sum));
  }
  r.expect_below("generating_function_consistency", gen, 1e-7);

  double fe = 0.0;
  for (cplx t : {cplx(0, 1.5), cplx(0, 2.0), cplx(0.4, 1.6)}) {
    for (double x : {0.0, 0.5, 1.0}) fe = std::max(fe, gaussian_functional_equation_residual(UpperHalfPoint(t), x, 30, engine));
  }
  r.expect_below("gaussian_functional_equation", fe, 1e-5);

  const ResidueDemonstration demo = residue_demonstration(UpperHalfPoint(0.93 * std::cos(1.2), 0.93 * std::sin(1.2)), 0.8);
  r.expect_below("residue_demonstration", demo.residual, 1e-6);

  const int n_low = std::clamp(opts.truncation_N, 1, engine.max_n());
  for (const char* label : {"gaussian", "gaussian-t2"}) {
    const TransformPair f = *fixture_by_label(label);
    double e_low = 0.0, e_high = 0.0;
    for (double x : {0.0, 0.3, 0.8, 1.4, 2.1}) {
      e_low = std::max(e_low, reconstruct(f, x, n_low, engine).abs_error);
      e_high = std::max(e_high, reconstruct(f, x, engine.max_n(), engine).abs_error);
    }
    r.expect_below(std::string("reconstruction_") + label, e_low, 1e-3);
    r.note(std::string("reconstruction_") + label + "_N" + std::to_string(n_low), e_low);
    r.note(std::string("reconstruction_") + label + "_N" + std::to_string(engine.max_n()), e_high);
  }
  return r;
}

SuiteReport verify_poisson(const SuiteOptions& opts) {
  SuiteReport r{"poisson", {}, {}};
  struct Case {
    const char* label;
    double t;
    double radius;
    bool check_tail;
  };
  const Case cases[] = {{"z1", 1.0, 6.0, true}, {"z1", 2.0, 6.0, true}, {"z2", 1.0, 6.0, true},
                        {"hex", 1.0, 6.0, true}, {"e8", 1.0, 4.0, false}};
  for (const Case& c : cases) {
    if (!opts.fixture.empty() && opts.fixture != c.label) continue;
    const Lattice l = lattice_fixture(c.label);
    const PoissonReport p = poisson_check(gaussian_pair(l.dimension(), c.t), l, c.radius);
    const std::string name = std::string("gaussian_t") + label_num(c.t) + "_" + c.label;
    r.expect_below(name, p.residual, 1e-9);
    if (c.check_tail) {
      r.expect_below(name + "_tail_bound", p.lhs_tail_bound + p.rhs_tail_bound, 1e-9);
    } else {
      r.note(name + "_tail_bound", p.lhs_tail_bound + p.rhs_tail_bound);
    }
    r.note(name + "_lhs", complex_text(p.lhs));
  }
  for (const char* label : {"z2", "hex"}) {
    if (!opts.fixture.empty() && opts.fixture != label) continue;
    for (double s : {0.7, 1.3}) {
      const Lattice l = lattice_fixture(label).scaled(s);
      const PoissonReport p = poisson_check(gaussian_pair(2), l, 8.0);
      r.expect_below(std::string("dilated_") + label + "_s" + label_num(s), p.residual, 1e-9);
    }
  }
  for (const char* label : {"z2", "hex", "e8"}) {
    if (!opts.fixture.empty() && opts.fixture != label) continue;
    const Lattice l = lattice_fixture(label);
    const Lattice dd = dual_lattice(dual_lattice(l));
    const double covol = std::fabs(dd.covolume() - l.covolume()) / l.covolume();
    const double radius = label == std::string("e8") ? 2.1 : 3.0;
    std::vector<double> a, b;
    for (const auto& v : short_vectors(l, radius)) a.push_back(v.squaredNorm());
    for (const auto& v : short_vectors(dd, radius)) b.push_back(v.squaredNorm());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double spectrum = a.size() == b.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) spectrum = std::max(spectrum, std::fabs(a[i] - b[i]));
    r.expect_below(std::string("double_dual_covolume_") + label, covol, 1e-12);
    r.expect_below(std::string("double_dual_spectrum_") + label, spectrum, 1e-9);
  }
  const Lattice z1 = lattice_fixture("z1");
  for (double t : {0.5, 1.0, 2.0}) {
    const UpperHalfPoint z(0.0, t);
    const PoissonReport p = poisson_check(complex_gaussian_pair(z), z1, 8.0);
    const double replay = std::abs(p.rhs - theta3(z.inverted()) / sqrt_neg_iz(z));
    r.expect_below("theta_replay_t" + label_num(t), std::max(replay, p.residual), 1e-10);
  }
  return r;
}

SuiteReport verify_lp(const SuiteOptions& opts) {
  SuiteReport r{"lp", {}, {}};
  const bool all = opts.fixture.empty();
  auto want = [&](const char* label) { return all || opts.fixture == label; };

  if (want("e8")) {
    const Lattice e8 = lattice_fixture("e8");
    const DensityReport d = lattice_packing_density(e8);
    const double target = std::pow(pi, 4) / 384.0;
    r.expect_below("e8_density", std::fabs(d.density - target), 1e-12);
    r.expect_below("e8_density_root8", std::fabs(std::pow(d.density, 0.125) - 0.84242944), 1e-7);
    r.note("e8_density", d.density);
    r.note("e8_density_root8", std::pow(d.density, 0.125));
    r.expect_below("e8_covolume", std::fabs(e8.covolume() - 1.0), 1e-12);
    long norm2 = 0, norm4 = 0;
    for (const auto& v : short_vectors(e8, 2.0 + 1e-9)) {
      const double q = v.squaredNorm();
      if (std::fabs(q - 2.0) < 1e-9) ++norm2;
      if (std::fabs(q - 4.0) < 1e-9) ++norm4;
    }
    r.expect_below("e8_norm2_count", std::fabs(double(norm2) - 240.0), 0.5);
    r.expect_below("e8_norm4_count", std::fabs(double(norm4) - 2160.0), 0.5);
    const CertificateOutcome g = lp_certificate_check(gaussian_certificate(8, std::sqrt(2.0)));
    r.expect_below("e8_gaussian_certificate_violates_sign", std::fabs(double(g.violated_condition) - 1.0), 0.5);
  }
  if (want("hex")) {
    const DensityReport d = lattice_packing_density(lattice_fixture("hex"));
    r.expect_below("hex_density", std::fabs(d.density - pi / std::sqrt(12.0)), 1e-12);
    r.expect_below("hex_density_root2", std::fabs(std::sqrt(d.density) - 0.95231281), 1e-7);
    r.note("hex_density", d.density);
    const LPCertificate c = product_triangle_certificate(2, std::sqrt(2.0));
    const CertificateOutcome o = lp_certificate_check(c);
    const SharpnessGap gap = lp_bound_sharpness_gap(lattice_fixture("hex"), c);
    r.expect_above("hex_gap_nonnegative", std::min({gap.dropped_f, gap.dropped_f_hat, gap.slack}), -1e-12);
    if (o.passed) r.expect_below("hex_density_within_bound", d.density - *o.bound, 1e-9);
  }
  if (want("z1")) {
    const CertificateOutcome o = lp_certificate_check(triangle_certificate());
    r.expect_below("z1_triangle_bound", o.passed ? std::fabs(*o.bound - 1.0) : 1.0, 1e-12);
    const SharpnessGap gap = lp_bound_sharpness_gap(lattice_fixture("z1"), triangle_certificate());
    r.expect_below("z1_dropped_terms", gap.dropped_f + gap.dropped_f_hat + std::fabs(gap.slack), 1e-10);
    const CertificateOutcome bad = lp_certificate_check(triangle_certificate(0.9));
    const bool located = bad.violated_condition == 1 && bad.radius >= 0.9 && bad.radius < 1.0 && bad.value > 0.0;
    r.expect_below("z1_short_radius_violation", located ? 0.0 : 1.0, 0.5);
    bool monotone = true;
    const LPCertificate base = triangle_certificate(1.0);
    for (double rr : {1.0, 1.2, 1.5, 2.0}) {
      LPCertificate c = base;
      c.r = rr;
      monotone = monotone && lp_certificate_check(c).passed;
    }
    r.expect_below("certificate_monotone_in_r", monotone ? 0.0 : 1.0, 0.5);
    if (o.passed) r.expect_below("z1_density_within_bound", lattice_packing_density(lattice_fixture("z1")).density - *o.bound, 1e-9);
  }
  if (want("z2")) {
    const LPCertificate c = product_triangle_certificate(2, std::sqrt(2.0));
    const CertificateOutcome o = lp_certificate_check(c);
    r.expect_below("z2_product_certificate_passes", o.passed ? 0.0 : 1.0, 0.5);
    const SharpnessGap gap = lp_bound_sharpness_gap(lattice_fixture("z2"), c);
    r.expect_above("z2_gap_positive", gap.dropped_f + gap.dropped_f_hat + gap.slack, 1e-6);
    r.note("z2_gap_slack", gap.slack);
    if (o.passed) r.expect_below("z2_density_within_bound", lattice_packing_density(lattice_fixture("z2")).density - *o.bound, 1e-9);
  }
  return r;
}

SuiteReport verify_classical(const SuiteOptions& opts) {
  SuiteReport r{"classical", {}, {}};
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  const NodeSet four = NodeSet::lagrange({0, 1, 2, 3});
  double unity = 0.0;
  for (double x = -1.0; x <= 4.0 + 1e-12; x += 0.01) {
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += lagrange_basis(four, k, x);
    unity = std::max(unity, std::fabs(s - 1.0));
  }
  r.expect_below("lagrange_partition_of_unity", unity, 1e-12);

  double exact = 0.0, agree = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<double> pts, poly(n), vals;
    for (int i = 0; i < n; ++i) pts.push_back(double(i) - 0.5 * n + 0.1 * trial);
    for (double& c : poly) c = coeff(rng);
    for (double p : pts) vals.push_back(evaluate_polynomial(poly, p));
    const NodeSet nodes = NodeSet::lagrange(pts);
    for (double x : {pts.front() - 0.37, 0.123, pts.back() + 0.41}) {
      const double ref = evaluate_polynomial(poly, x);
      exact = std::max(exact, std::fabs(lagrange_interpolate(nodes, vals, x) - ref) / std::max(1.0, std::fabs(ref)));
    }
    std::vector<std::vector<double>> data;
    for (double v : vals) data.push_back({v});
    const std::vector<double> herm = hermite_interpolate(nodes, data);
    for (int i = 0; i < n; ++i) agree = std::max(agree, std::fabs(herm[i] - poly[i]));
  }
  r.expect_below("lagrange_exactness", exact, 1e-10);
  r.expect_below("hermite_lagrange_agreement", agree, 1e-10);

  const double band = 1.0;
  std::vector<double> self;
  for (long n = -50; n <= 50; ++n) self.push_back(n == 0 ? 1.0 : 0.0);
  r.expect_below("shannon_self_sample", std::fabs(shannon_reconstruct(self, band, 0.0) - 1.0), 1e-15);

  auto fixture = [](double x) { return x == 0.0 ? 0.4 : std::sin(2.0 * pi * 0.2 * x) / (pi * x); };
  std::vector<double> samples;
  for (long n = -200; n <= 200; ++n) samples.push_back(fixture(double(n)));
  double cardinal = 0.0;
  for (long m = -200; m <= 200; ++m) {
    cardinal = std::max(cardinal, std::fabs(shannon_reconstruct(samples, band, double(m)) - fixture(double(m))));
  }
  r.expect_below("shannon_cardinal_property", cardinal, 1e-300);
  r.expect_below("shannon_band_limited", std::fabs(shannon_reconstruct(samples, band, 0.37) - fixture(0.37)), 1e-4);

  r.expect_below("sinc_product_half", std::fabs(sinc_product_partial(0.5, 10000) - 2.0 / pi), 1e-4);
  double constant = 0.0;
  for (double x = 0.05; x <= 2.0 + 1e-12; x += 0.05) {
    const double target = std::sin(pi * x) / (pi * x);
    const double err = std::fabs(sinc_product_partial(x, 10000) - target);
    constant = std::max(constant, err * 10000.0 / (x * x * std::log(10000.0)));
  }
  r.note("sinc_product_rate_constant", constant);
  return r;
}

std::vector<std::string> suite_names() { return {"theta", "kernels", "interpolation", "poisson", "lp", "classical"}; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "theta") return verify_theta(opts);
  if (name == "kernels") return verify_kernels(opts);
  if (name == "interpolation") return verify_interpolation(opts);
  if (name == "poisson") return verify_poisson(opts);
  if (name == "lp") return verify_lp(opts);
  if (name == "classical") return verify_classical(opts);
  throw NumericalError(ErrorKind::InvalidArgument, "unknown suite " + name);
}

std::string report_json(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["passed"] = report.passed();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", format_real(c.measured)},
                      {"threshold", format_real(c.threshold)},
                      {"relation", c.relation},
                      {"passed", c.passed}});
  }
  doc["checks"] = checks;
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.info) info[k] = v;
  doc["info"] = info;
  return doc.dump(2) + "\n";
}

}  // namespace fourier_interp
