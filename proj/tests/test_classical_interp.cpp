#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "fourier_interp/classical_interp.hpp"
#include "fourier_interp/errors.hpp"

using namespace fourier_interp;

namespace {

constexpr double kPi = std::numbers::pi;

double band_limited(double x) {
  if (x == 0.0) return 0.4;
  return std::sin(2.0 * kPi * 0.2 * x) / (kPi * x);
}

}  // namespace

TEST_CASE("Lagrange basis") {
  const NodeSet nodes = NodeSet::lagrange({0.0, 1.0, 2.0});
  CHECK(lagrange_basis(nodes, 1, 1.0) == 1.0);
  CHECK(lagrange_basis(nodes, 1, 2.0) == 0.0);
  CHECK(std::fabs(lagrange_interpolate(nodes, {1.0, 2.0, 5.0}, 3.0) - 10.0) < 1e-14);
  CHECK_THROWS_AS(lagrange_basis(nodes, 3, 0.5), NumericalError);

  NodeSet hermite{{0.0, 1.0}, {2, 1}};
  CHECK_THROWS_AS(lagrange_basis(hermite, 0, 0.5), NumericalError);
  CHECK_THROWS_AS(NodeSet::lagrange({0.0, 0.0}), NumericalError);
}

TEST_CASE("partition of unity") {
  const NodeSet nodes = NodeSet::lagrange({0.0, 1.0, 2.0, 3.0});
  for (double x = -1.0; x <= 4.0 + 1e-12; x += 0.01) {
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += lagrange_basis(nodes, k, x);
    CHECK(std::fabs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("Lagrange exactness on random polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-2.0, 2.0), off(-1.0, 6.0);
  for (int deg = 1; deg <= 6; ++deg) {
    std::vector<double> c(deg + 1);
    for (double& v : c) v = coef(rng);
    std::vector<double> pts, vals;
    for (int k = 0; k <= deg; ++k) {
      pts.push_back(k * 0.9 - 0.3);
      vals.push_back(evaluate_polynomial(c, pts.back()));
    }
    const NodeSet nodes = NodeSet::lagrange(pts);
    for (int i = 0; i < 10; ++i) {
      const double x = off(rng);
      const double exact = evaluate_polynomial(c, x);
      CHECK(std::fabs(lagrange_interpolate(nodes, vals, x) - exact) < 1e-10 * std::max(1.0, std::fabs(exact)));
    }
  }
}

TEST_CASE("Hermite interpolation") {
  const std::vector<double> line = hermite_interpolate(NodeSet{{0.0}, {2}}, {{1.0, 3.0}});
  REQUIRE(line.size() == 2);
  CHECK(line[0] == doctest::Approx(1.0));
  CHECK(line[1] == doctest::Approx(3.0));

  const std::vector<double> cube = hermite_interpolate(NodeSet{{0.0, 1.0}, {2, 2}}, {{0.0, 0.0}, {1.0, 3.0}});
  REQUIRE(cube.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(cube[k] - (k == 3 ? 1.0 : 0.0)) < 1e-14);

  const std::vector<double> secant = hermite_interpolate(NodeSet::lagrange({0.0, 1.0}), {{0.0}, {1.0}});
  CHECK(std::fabs(evaluate_polynomial(secant, 0.5) - 0.5) < 1e-15);
  CHECK(std::fabs((0.25 - evaluate_polynomial(secant, 0.5)) + 0.25) < 1e-15);
  CHECK(std::fabs(secant[1] - 1.0) < 1e-15);

  // Higher multiplicity: exp data at two nodes with three derivatives each.
  const NodeSet triple{{0.0, 0.5}, {3, 3}};
  const std::vector<double> e = hermite_interpolate(triple, {{1.0, 1.0, 1.0}, {std::exp(0.5), std::exp(0.5), std::exp(0.5)}});
  CHECK(std::fabs(evaluate_polynomial(e, 0.25) - std::exp(0.25)) < 1e-5);

  CHECK_THROWS_AS(hermite_interpolate(NodeSet{{0.0, 1.0}, {2, 1}}, {{1.0}, {2.0}}), NumericalError);
  CHECK_THROWS_AS(hermite_interpolate(NodeSet{{0.0, 1.0}, {1, 1}}, {{1.0}}), NumericalError);
}

TEST_CASE("Hermite with unit orders matches Lagrange coefficient-wise") {
  const std::vector<double> pts = {-1.0, 0.2, 0.7, 1.5, 2.0};
  const std::vector<double> vals = {0.3, -1.2, 2.2, 0.1, 1.0};
  std::vector<std::vector<double>> data;
  for (double v : vals) data.push_back({v});
  const std::vector<double> h = hermite_interpolate(NodeSet::lagrange(pts), data);

  // Lagrange coefficients by expanding each basis product.
  std::vector<double> l(pts.size(), 0.0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<double> p = {1.0};
    double denom = 1.0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == k) continue;
      std::vector<double> q(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] -= pts[j] * p[i];
        q[i + 1] += p[i];
      }
      p = q;
      denom *= pts[k] - pts[j];
    }
    for (std::size_t i = 0; i < p.size(); ++i) l[i] += vals[k] * p[i] / denom;
  }
  REQUIRE(h.size() == l.size());
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(std::fabs(h[i] - l[i]) < 1e-12);
}

TEST_CASE("Shannon sampling") {
  const int n = 200;
  std::vector<double> self(2 * n + 1, 0.0);
  self[n] = 1.0;
  CHECK(shannon_reconstruct(self, 2.0, 0.0) == 1.0);
  CHECK(std::fabs(shannon_reconstruct(self, 2.0, 0.3) - std::sin(kPi * 0.6) / (kPi * 0.6)) < 1e-15);

  std::vector<double> samples;
  for (int k = -n; k <= n; ++k) samples.push_back(band_limited(double(k)));
  for (int m = -n; m <= n; m += 7) CHECK(shannon_reconstruct(samples, 1.0, double(m)) == band_limited(double(m)));
  CHECK(std::fabs(shannon_reconstruct(samples, 1.0, 0.37) - band_limited(0.37)) < 1e-4);

  // Samples at k / r for a different rate.
  std::vector<double> half;
  for (int k = -n; k <= n; ++k) half.push_back(band_limited(k / 2.0));
  CHECK(shannon_reconstruct(half, 2.0, 1.5) == band_limited(1.5));
  CHECK(std::fabs(shannon_reconstruct(half, 2.0, 0.37) - band_limited(0.37)) < 1e-4);

  const ShannonResult rep = shannon_reconstruct_report(samples, 1.0, 0.37, 0.01);
  CHECK(rep.tail_bound == 0.01);
  CHECK(rep.value == shannon_reconstruct(samples, 1.0, 0.37));
  CHECK_THROWS_AS(shannon_reconstruct({1.0, 2.0}, 1.0, 0.0), NumericalError);
}

TEST_CASE("sinc partial products") {
  for (long j : {1L, 5L, 100L}) CHECK(sinc_product_partial(1.0, j) == 0.0);
  CHECK(sinc_product_partial(0.0, 50) == 1.0);
  CHECK(std::fabs(sinc_product_partial(0.5, 10000) - 2.0 / kPi) < 1e-4);
  CHECK(sinc_product_partial(-1.0, 10) == 0.0);

  // Error shrinks like x^2 log(J) / J on [0, 2].
  for (double x : {0.25, 0.5, 1.5, 1.75}) {
    const double exact = std::sin(kPi * x) / (kPi * x);
    double prev = INFINITY;
    for (long j : {100L, 1000L, 10000L}) {
      const double err = std::fabs(sinc_product_partial(x, j) - exact);
      CHECK(err <= 2.0 * x * x * std::log(double(j)) / double(j));
      CHECK(err < prev);
      prev = err;
    }
  }
}
