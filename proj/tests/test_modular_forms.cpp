#include "doctest.h"

#include <cmath>
#include <random>

#include "fourier_interp/modular_forms.hpp"

#ifdef FI_HAVE_BOOST_MP
#include <boost/multiprecision/cpp_dec_float.hpp>
#endif

using namespace fourier_interp;

namespace {

// Oracle: direct summation of e^{pi i n^2 z} in long double.
std::complex<long double> brute_theta3(cplx z, int terms = 60) {
  std::complex<long double> s = 1.0L;
  const std::complex<long double> zz(z.real(), z.imag());
  const std::complex<long double> i_pi(0.0L, 3.14159265358979323846264338327950288L);
  for (int n = 1; n <= terms; ++n) s += 2.0L * std::exp(i_pi * (long double)(n * n) * zz);
  return s;
}

std::complex<long double> brute_theta2(cplx z, int terms = 60) {
  std::complex<long double> s = 0.0L;
  const std::complex<long double> zz(z.real(), z.imag());
  const std::complex<long double> i_pi(0.0L, 3.14159265358979323846264338327950288L);
  for (int n = 0; n <= terms; ++n) {
    const long double k = n + 0.5L;
    s += 2.0L * std::exp(i_pi * k * k * zz);
  }
  return s;
}

double rel(cplx a, std::complex<long double> b) {
  const cplx bd(double(b.real()), double(b.imag()));
  return std::abs(a - bd) / std::max(1.0, std::abs(bd));
}

}  // namespace

TEST_CASE("upper half-plane points reject the real axis and below") {
  CHECK_THROWS_AS(UpperHalfPoint(0.3, 0.0), NumericalError);
  CHECK_THROWS_AS(UpperHalfPoint(0.3, -1.0), NumericalError);
  CHECK_THROWS_AS(UpperHalfPoint(NAN, 1.0), NumericalError);
  CHECK_NOTHROW(UpperHalfPoint(0.3, 1e-9));
}

TEST_CASE("series tolerance validation") {
  SeriesTolerance bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(theta3(UpperHalfPoint(0.0, 1.0), bad), NumericalError);
  SeriesTolerance few;
  few.max_terms = 4;
  CHECK_THROWS_AS(theta3(UpperHalfPoint(0.0, 1.0), few), NumericalError);
}

TEST_CASE("theta3 at i against a high-precision oracle") {
  const double value = theta3(UpperHalfPoint(0.0, 1.0)).real();
  // pi^{1/4} / Gamma(3/4)
  const double closed = std::pow(pi, 0.25) / std::tgamma(0.75);
  CHECK(std::fabs(value - closed) < 4e-16);
  CHECK(std::fabs(value - 1.08643481121331) < 1e-14);
#ifdef FI_HAVE_BOOST_MP
  using boost::multiprecision::cpp_dec_float_50;
  const cpp_dec_float_50 bpi = boost::math::constants::pi<cpp_dec_float_50>();
  cpp_dec_float_50 sum = 1;
  for (int n = 1; n <= 50; ++n) sum += 2 * exp(-bpi * n * n);
  CHECK(std::fabs(value - sum.convert_to<double>()) < 4e-16);
#endif
}

TEST_CASE("theta3 periodicity and inversion at the documented points") {
  const UpperHalfPoint z(0.3, 0.7);
  CHECK(std::abs(theta3(z.shifted(2.0)) - theta3(z)) < 1e-14);
  const UpperHalfPoint w(0.2, 1.1);
  CHECK(std::abs(theta3(w.inverted()) - sqrt_neg_iz(w) * theta3(w)) < 1e-12);
}

TEST_CASE("theta values match direct long-double summation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.3, 4.0);
  for (int k = 0; k < 60; ++k) {
    const cplx z(re(rng), im(rng));
    CHECK(rel(theta3(UpperHalfPoint(z)), brute_theta3(z)) < 1e-13);
    CHECK(rel(theta2(UpperHalfPoint(z)), brute_theta2(z)) < 1e-13);
    CHECK(rel(theta_triple(z).theta3, brute_theta3(z)) < 1e-13);
  }
}

TEST_CASE("theta4 over theta3 at i") {
  const UpperHalfPoint i(0.0, 1.0);
  CHECK(std::abs(theta4(i) / theta3(i) - std::pow(2.0, -0.25)) < 1e-12);
}

TEST_CASE("Jacobi quartic identity at 0.4 + 0.9i") {
  const UpperHalfPoint z(0.4, 0.9);
  const cplx d = std::pow(theta2(z), 4) + std::pow(theta4(z), 4) - std::pow(theta3(z), 4);
  CHECK(std::abs(d) < 1e-11);
}

TEST_CASE("theta2 decays along the imaginary axis") {
  const double t2 = std::abs(theta2(UpperHalfPoint(0.0, 2.0)));
  const double t4 = std::abs(theta2(UpperHalfPoint(0.0, 4.0)));
  const double t8 = std::abs(theta2(UpperHalfPoint(0.0, 8.0)));
  CHECK(t2 > t4);
  CHECK(t4 > t8);
  CHECK(std::fabs(t8 - 2.0 * std::exp(-2.0 * pi)) < 1e-12);
}

TEST_CASE("raw series refuse points below the floor, reduced evaluation does not") {
  CHECK_THROWS_AS(theta3_series<double>(cplx(0.1, 0.01)), NumericalError);
  const cplx z(0.1, 0.01);
  // theta(z) = (-iz)^{-1/2} theta(-1/z) with -1/z high up.
  const cplx w = -1.0 / z;
  const cplx expected = theta3_series<double>(w) / sqrt_neg_iz<double>(z);
  CHECK(std::abs(theta_triple(z).theta3 - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
}

TEST_CASE("lambda, h and J at the documented points") {
  const UpperHalfPoint i(0.0, 1.0);
  CHECK(std::abs(lambda_modular(i) - 0.5) < 1e-14);
  CHECK(std::abs(h_function(i)) < 1e-14);
  CHECK(std::abs(hauptmodul_J(i) - 1.0 / 64.0) < 1e-15);

  const UpperHalfPoint a(0.1, 0.8);
  CHECK(std::abs(lambda_modular(a.shifted(2.0)) - lambda_modular(a)) < 1e-11);
  CHECK(std::abs(lambda_modular(UpperHalfPoint(0.0, 3.0))) < 1.3e-3);
  CHECK(std::abs(lambda_modular(UpperHalfPoint(0.0, 5.0))) < 2.5e-6);
  // Leading behaviour 16 e^{-pi t}.
  CHECK(std::abs(lambda_modular(UpperHalfPoint(0.0, 5.0)) / (16.0 * std::exp(-5.0 * pi)) - 1.0) < 1e-5);

  const UpperHalfPoint b(0.3, 1.2);
  CHECK(std::abs(h_function(b.inverted()) + h_function(b)) < 1e-11);
  CHECK(std::abs(h_function(UpperHalfPoint(0.0, 5.0)) - 1.0) < 5e-6);

  const UpperHalfPoint c(0.25, 0.9);
  CHECK(std::abs(hauptmodul_J(c.inverted()) - hauptmodul_J(c)) < 1e-11);
  const UpperHalfPoint d(0.6, 0.7);
  const cplx h = h_function(d);
  CHECK(std::abs(hauptmodul_J(d) - (1.0 - h * h) / 64.0) < 1e-12);
}

TEST_CASE("transformation laws on 200 seeded points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.2, 5.0);
  for (int k = 0; k < 200; ++k) {
    const UpperHalfPoint z(re(rng), im(rng));
    const cplx t = theta3(z);
    CHECK(std::abs(theta3(z.shifted(2.0)) - t) < 1e-11);
    CHECK(std::abs(theta3(z.inverted()) - sqrt_neg_iz(z) * t) < 1e-10 * (1.0 + std::abs(t)));
    const cplx lam = lambda_modular(z);
    CHECK(std::abs(lambda_modular(z.inverted()) - (1.0 - lam)) < 1e-10 * (1.0 + std::abs(lam)));
    const cplx j = hauptmodul_J(z);
    CHECK(std::abs(hauptmodul_J(z.inverted()) - j) < 1e-10 * (1.0 + std::abs(j)));
    CHECK(std::abs(hauptmodul_J(z.shifted(2.0)) - j) < 1e-10 * (1.0 + std::abs(j)));
    const cplx quartic = std::pow(theta2(z), 4) + std::pow(theta4(z), 4);
    CHECK(std::abs(quartic - std::pow(t, 4)) < 1e-10 * std::abs(std::pow(t, 4)));
  }
}

TEST_CASE("principal square root of -iz") {
  CHECK(std::abs(sqrt_neg_iz(UpperHalfPoint(0.0, 1.0)) - 1.0) < 1e-16);
  CHECK(std::abs(sqrt_neg_iz(UpperHalfPoint(0.0, 4.0)) - 2.0) < 1e-15);
  const UpperHalfPoint z(-0.9, 0.1);
  const cplx s = sqrt_neg_iz(z);
  CHECK(std::abs(s * s + kI * z.value()) < 1e-15);
  CHECK(s.real() > 0.0);

  cplx prev = sqrt_neg_iz(UpperHalfPoint(-0.99, 0.05));
  for (int k = 1; k <= 400; ++k) {
    const double s01 = double(k) / 400.0;
    const cplx p = cplx(-0.99, 0.05) + s01 * cplx(1.98, 0.0) + kI * 0.95 * std::sin(pi * s01);
    const cplx v = sqrt_neg_iz(UpperHalfPoint(p));
    CHECK(std::abs(v - prev) < 0.05);
    prev = v;
  }
}

TEST_CASE("region S membership") {
  CHECK(in_region_S(UpperHalfPoint(0.0, 1.5)));
  CHECK_FALSE(in_region_S(UpperHalfPoint(0.0, 0.5)));
  CHECK(in_region_S(UpperHalfPoint(1.0, 0.9)));
  CHECK_FALSE(in_region_S(UpperHalfPoint(2.1, 0.5)));
}

TEST_CASE("theta group orbit") {
  const UpperHalfPoint tau(0.0, 3.0);
  const std::vector<UpperHalfPoint> one = gamma_theta_orbit(tau, 1);
  auto contains = [&](const std::vector<UpperHalfPoint>& pts, cplx w) {
    for (const auto& p : pts) {
      if (std::abs(p.value() - w) < 1e-12) return true;
    }
    return false;
  };
  CHECK(contains(one, cplx(0, 3)));
  CHECK(contains(one, cplx(2, 3)));
  CHECK(contains(one, cplx(-2, 3)));
  CHECK(contains(one, cplx(0, 1.0 / 3.0)));

  const std::vector<OrbitPoint> two = gamma_theta_orbit_words(tau, 2);
  const cplx j0 = hauptmodul_J(tau);
  for (const OrbitPoint& o : two) {
    CHECK(o.point.im() > 0.0);
    CHECK(std::abs(o.word.apply(tau.value()) - o.point.value()) < 1e-12);
    CHECK(std::abs(hauptmodul_J(o.point) - j0) < 1e-10);
  }
  // Duplicates are removed.
  for (std::size_t a = 0; a < two.size(); ++a) {
    for (std::size_t b = a + 1; b < two.size(); ++b) CHECK(std::abs(two[a].point.value() - two[b].point.value()) > 1e-12);
  }
}

TEST_CASE("level-2 congruence classification of words") {
  const Mobius t2{1, 2, 0, 1}, s{0, -1, 1, 0};
  CHECK(t2.in_gamma2());
  CHECK_FALSE(s.in_gamma2());
  CHECK((s * t2 * s).in_gamma2());
  CHECK_FALSE((t2 * s).in_gamma2());
}

TEST_CASE("modular point keeps h projective near the cusp 1") {
  const ModularPoint p = modular_point(cplx(1.0, 0.02));
  CHECK(std::isfinite(std::abs(p.h_num)));
  CHECK(std::isfinite(std::abs(p.h_den)));
  const ModularPoint q = modular_point(cplx(0.2, 1.3));
  CHECK(std::abs(q.h() - h_function(UpperHalfPoint(0.2, 1.3))) < 1e-13);
}
