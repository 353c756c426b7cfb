#include "fourier_interp/modular_forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fourier_interp {

cplx theta3(const UpperHalfPoint& z, const SeriesTolerance& tol) { return theta3_series(z.value(), tol); }
cplx theta2(const UpperHalfPoint& z, const SeriesTolerance& tol) { return theta2_series(z.value(), tol); }
cplx theta4(const UpperHalfPoint& z, const SeriesTolerance& tol) { return theta4_series(z.value(), tol); }
cplx sqrt_neg_iz(const UpperHalfPoint& z) { return sqrt_neg_iz(z.value()); }

namespace {

// Reduced points satisfy Im z >= sqrt(3)/2, so |q| <= 0.066 and a handful of
// terms reach full precision.
constexpr SeriesTolerance kReducedSeries{1e-18, 64, 0.5, false};
constexpr int kMaxReductionSteps = 400;

ThetaTriple reduce_and_evaluate(cplx z, int budget) {
  if (budget <= 0) {
    throw NumericalError(ErrorKind::ToleranceUnreachable, "theta reduction did not terminate");
  }
  const double shift = std::round(z.real());
  if (std::abs(z.real()) > 0.5 && shift != 0.0) {
    ThetaTriple t = reduce_and_evaluate(z - shift, budget - 1);
    // theta_2(z+1) = e^{i pi/4} theta_2(z); theta_3(z+1) = theta_4(z) and back.
    const long k = std::lround(shift);
    t.theta2 *= std::polar(1.0, pi / 4.0 * double(k % 8));
    if (k % 2 != 0) std::swap(t.theta3, t.theta4);
    return t;
  }
  if (std::norm(z) < 1.0 - 1e-12) {
    const cplx w = -1.0 / z;
    const ThetaTriple t = reduce_and_evaluate(w, budget - 1);
    const cplx s = sqrt_neg_iz(w);
    return {s * t.theta4, s * t.theta3, s * t.theta2};
  }
  return {theta2_series(z, kReducedSeries), theta3_series(z, kReducedSeries), theta4_series(z, kReducedSeries)};
}

}  // namespace

ThetaTriple theta_triple(cplx z) {
  if (!(z.imag() > 0.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "theta needs Im z > 0");
  }
  return reduce_and_evaluate(z, kMaxReductionSteps);
}

ModularPoint modular_point(cplx z) {
  const ThetaTriple t = theta_triple(z);
  const cplx t2sq = t.theta2 * t.theta2;
  const cplx t3sq = t.theta3 * t.theta3;
  const cplx t4sq = t.theta4 * t.theta4;
  return {z, t.theta3, t4sq * t4sq - t2sq * t2sq, t3sq * t3sq};
}

cplx lambda_modular(const UpperHalfPoint& z) {
  const ThetaTriple t = theta_triple(z.value());
  const cplx r = t.theta2 / t.theta3;
  const cplx r2 = r * r;
  return r2 * r2;
}

cplx h_function(const UpperHalfPoint& z) { return 1.0 - 2.0 * lambda_modular(z); }

cplx hauptmodul_J(const UpperHalfPoint& z) {
  const ThetaTriple t = theta_triple(z.value());
  const cplx r = t.theta2 / t.theta3;
  const cplx s = t.theta4 / t.theta3;
  const cplx lam = (r * r) * (r * r);
  const cplx one_minus = (s * s) * (s * s);
  return lam * one_minus / 16.0;
}

bool in_region_S(const UpperHalfPoint& tau) {
  // Only the two nearest even integers can be within distance 1.
  const double base = 2.0 * std::floor(tau.re() / 2.0);
  for (double n : {base, base + 2.0}) {
    if (std::abs(tau.value() - n) <= 1.0) return false;
  }
  return true;
}

std::vector<OrbitPoint> gamma_theta_orbit_words(const UpperHalfPoint& tau, int depth, const OrbitOptions& opts) {
  if (depth < 0) {
    throw NumericalError(ErrorKind::InvalidArgument, "orbit depth must be nonnegative");
  }
  const Mobius generators[] = {{1, 2, 0, 1}, {1, -2, 0, 1}, {0, -1, 1, 0}};

  std::vector<OrbitPoint> orbit{{tau, Mobius{}}};
  auto seen = [&](cplx w) {
    return std::any_of(orbit.begin(), orbit.end(),
                       [&](const OrbitPoint& p) { return std::abs(p.point.value() - w) <= opts.dedup_tol; });
  };

  std::size_t frontier_begin = 0;
  for (int level = 0; level < depth && orbit.size() < opts.max_points; ++level) {
    const std::size_t frontier_end = orbit.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const Mobius& g : generators) {
        const cplx w = g.apply(orbit[i].point.value());
        if (!(w.imag() > 0.0) || seen(w)) continue;
        orbit.push_back({UpperHalfPoint(w), g * orbit[i].word});
        if (orbit.size() >= opts.max_points) return orbit;
      }
    }
    frontier_begin = frontier_end;
  }
  return orbit;
}

std::vector<UpperHalfPoint> gamma_theta_orbit(const UpperHalfPoint& tau, int depth, const OrbitOptions& opts) {
  std::vector<UpperHalfPoint> points;
  for (const OrbitPoint& p : gamma_theta_orbit_words(tau, depth, opts)) points.push_back(p.point);
  return points;
}

double gamma2_secondary_height(cplx p, int max_c) {
  // Im(g p) = Im p / |c p + d|^2 with c even and nonzero, d odd, gcd(c, d) = 1.
  double best = 0.0;
  for (int c = 2; c <= max_c; c += 2) {
    const double centre = -double(c) * p.real();
    const int d_lo = int(std::floor(centre)) - 3;
    const int d_hi = int(std::ceil(centre)) + 3;
    for (int d = d_lo; d <= d_hi; ++d) {
      if (d % 2 == 0 || std::gcd(c, std::abs(d)) != 1) continue;
      for (int sc : {1, -1}) {
        const double denom = std::norm(double(sc * c) * p + double(sc * d));
        best = std::max(best, p.imag() / denom);
      }
    }
  }
  return best;
}

}  // namespace fourier_interp
