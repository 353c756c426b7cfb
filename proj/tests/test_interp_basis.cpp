#include "doctest.h"

#include <cmath>
#include <sstream>

#include "fourier_interp/interp_basis.hpp"
#include "fourier_interp/table_io.hpp"

using namespace fourier_interp;

TEST_CASE("a0 values") {
  CHECK(std::fabs(a0(0.0) - 0.5) < 1e-8);
  CHECK(std::fabs(a0(1.0)) < 1e-7);
  CHECK(std::fabs(a0(std::sqrt(5.0))) < 1e-6);
  for (int m = 1; m <= 8; ++m) CHECK(std::fabs(a0(std::sqrt(double(m)))) < 1e-5);
  CHECK_THROWS_AS(a0(-0.1), NumericalError);
}

TEST_CASE("a0 on semicircle and polygon agree") {
  for (double x = 0.5; x <= 1.5 + 1e-12; x += 0.125) {
    const QuadratureResult s = a0_on(semicircle(), x);
    const QuadratureResult p = a0_on(polygon_contour(), x);
    CHECK(std::abs(s.value - p.value) < 1e-6);
    CHECK(std::fabs(s.value.imag()) < 1e-10);
  }
}

TEST_CASE("theta cubed coefficients against exhaustive search") {
  const std::vector<long long> r = theta_cubed_coefficients(30);
  for (int m = 0; m <= 30; ++m) {
    long long count = 0;
    for (int a = -6; a <= 6; ++a) {
      for (int b = -6; b <= 6; ++b) {
        for (int c = -6; c <= 6; ++c) count += (a * a + b * b + c * c == m);
      }
    }
    CHECK(r[m] == count);
  }
  CHECK(r[0] == 1);
  CHECK(r[1] == 6);
  CHECK(r[2] == 12);
}

TEST_CASE("basis values at interpolation nodes") {
  CHECK(std::fabs(basis_value(1, false, 1.0) - 1.0) < 1e-5);
  CHECK(std::fabs(basis_value(1, false, std::sqrt(2.0))) < 1e-5);
  CHECK(std::fabs(basis_value(2, true, std::sqrt(3.0))) < 1e-5);
  for (int n : {1, 2}) CHECK(std::fabs(basis_value(n, false, 0.0) + basis_value(n, true, 0.0)) < 1e-5);

  const BasisEngine& e = default_basis_engine();
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const double x = std::sqrt(double(m));
      CHECK(std::fabs(e.value(n, false, x).value - (n == m ? 1.0 : 0.0)) < 1e-4);
      CHECK(std::fabs(e.value(n, true, x).value) < 1e-4);
    }
    CHECK(std::fabs(e.value(n, false, 0.0).value + e.value(n, true, 0.0).value) < 1e-4);
  }
  for (int m = 1; m <= 6; ++m) CHECK(std::fabs(e.value(0, false, std::sqrt(double(m))).value) < 1e-4);
  CHECK(std::fabs(e.value(0, false, 0.0).value - 0.5) < 1e-6);
}

TEST_CASE("row 0 is self-dual and matches the theta-cubed route") {
  const BasisEngine& e = default_basis_engine();
  for (double x : make_grid(0.0, 3.0, 0.1)) {
    const BasisValue a = e.value(0, false, x), b = e.value(0, true, x);
    CHECK(std::fabs(a.value - b.value) < 1e-5);
    CHECK(std::fabs(a.imag) < 1e-8);
    CHECK(std::fabs(b.imag) < 1e-8);
    CHECK(a.error_estimate >= 0.0);
  }
  for (double x : {0.3, 0.9, 1.7, 2.4}) CHECK(std::fabs(e.value(0, false, x).value - a0(x)) < 1e-8);
}

TEST_CASE("generating function") {
  const UpperHalfPoint tau(0.0, 1.8);
  CHECK(std::abs(generating_F(false, tau.shifted(2.0), 0.7) - generating_F(false, tau, 0.7)) < 1e-9);

  const BasisEngine& e = default_basis_engine();
  const std::vector<BasisValue> row = e.values(false, 0.5);
  cplx sum = 0.0;
  for (int n = 0; n <= 12; ++n) sum += row[n].value * std::exp(-3.0 * n * pi);
  CHECK(std::abs(generating_F(false, UpperHalfPoint(0.0, 3.0), 0.5) - sum) < 1e-8);

  const double diff = std::abs(generating_F(false, UpperHalfPoint(0.0, 4.0), 0.5) - generating_F(true, UpperHalfPoint(0.0, 4.0), 0.5));
  CHECK(diff * std::exp(4.0 * pi) < 5.0);

  CHECK_THROWS_AS(generating_F(false, UpperHalfPoint(0.2, 0.5), 0.5), NumericalError);
}

TEST_CASE("Gaussian functional equation") {
  CHECK(gaussian_functional_equation_residual(UpperHalfPoint(0.0, 2.0), 0.5, 30) < 1e-5);
  const FunctionalEquationReport r = gaussian_functional_equation(UpperHalfPoint(0.0, 2.0), 0.0, 30);
  CHECK(std::abs(r.gaussian - 1.0) < 1e-16);
  CHECK(r.residual < 1e-5);
  for (cplx t : {cplx(0, 1.5), cplx(0, 2.0), cplx(0.4, 1.6)}) {
    for (double x : {0.0, 0.5, 1.0}) CHECK(gaussian_functional_equation_residual(UpperHalfPoint(t), x, 30) < 1e-5);
  }
  double prev = INFINITY;
  for (int n = 10; n <= 30; n += 5) {
    const double res = gaussian_functional_equation_residual(UpperHalfPoint(0.0, 1.5), 1.0, n);
    CHECK(res <= prev + 1e-8);
    prev = res;
  }
}

TEST_CASE("reconstruction of Gaussians") {
  const TransformPair g = *fixture_by_label("gaussian");
  CHECK(std::fabs(reconstruct(g, 0.0, 30).reconstructed - 1.0) < 1e-4);
  const ReconstructionReport at2 = reconstruct(g, std::sqrt(2.0), 30);
  CHECK(std::fabs(at2.reconstructed - std::exp(-2.0 * pi)) < 1e-4);
  CHECK(at2.abs_error == std::fabs(at2.reconstructed - at2.reference));
  const TransformPair g2 = *fixture_by_label("gaussian-t2");
  CHECK(std::fabs(reconstruct(g2, 0.8, 40).reconstructed - std::exp(-2.0 * pi * 0.64)) < 1e-4);
  for (const TransformPair* f : {&g, &g2}) {
    for (double x : {0.0, 0.3, 0.8, 1.4, 2.1}) {
      const ReconstructionReport r40 = reconstruct(*f, x, 40);
      const ReconstructionReport r60 = reconstruct(*f, x, 60);
      CHECK(r40.abs_error < 1e-3);
      CHECK(r60.abs_error <= r40.abs_error + 1e-15);
      CHECK(r60.term_tail_bound <= r40.term_tail_bound);
    }
  }
  CHECK_THROWS_AS(reconstruct(g, 0.5, 0), NumericalError);
}

TEST_CASE("Poisson redundancy of the node values") {
  CHECK(poisson_redundancy_residual(*fixture_by_label("gaussian"), 8) < 1e-10);
  CHECK(poisson_redundancy_residual(*fixture_by_label("gaussian-t2"), 10) < 1e-10);
  // Triangle: f vanishes past 1, the sinc^2 side is summed far out with its tail bound.
  const TransformPair t = *fixture_by_label("triangle");
  const double lhs = t.f(0.0).real();
  double rhs = t.f_hat(0.0).real();
  for (int k = 1; k <= 2000; ++k) rhs += 2.0 * t.f_hat(double(k)).real();
  CHECK(std::fabs(lhs - rhs) < 1e-8);
  CHECK(poisson_redundancy_residual(t, 4) < 1e-8);
}

TEST_CASE("residue demonstration below the semicircle") {
  const UpperHalfPoint tau(0.93 * std::cos(1.2), 0.93 * std::sin(1.2));
  const ResidueDemonstration d = residue_demonstration(tau, 0.8);
  CHECK(d.residual < 1e-6);
  CHECK(std::abs(d.difference - d.expected) == doctest::Approx(d.residual));
}

TEST_CASE("basis tables round-trip through CSV and JSON") {
  const BasisTable t = build_basis_table(3, make_grid(0.0, 1.0, 0.25));
  CHECK(t.a.rows() == 4);
  CHECK(t.a.cols() == 5);
  CHECK(t.node_deviation() < 1e-4);

  std::stringstream csv;
  write_table_csv(t, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("n,x,a,a_hat,err_a,err_ahat\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  const BasisTable back = read_table_csv(csv);
  CHECK(back.a == t.a);
  CHECK(back.a_hat == t.a_hat);
  CHECK(back.err_a == t.err_a);
  CHECK(back.x_grid == t.x_grid);

  std::stringstream json;
  write_table_json(t, json);
  const BasisTable jb = read_table_json(json);
  CHECK(jb.a == t.a);
  CHECK(jb.err_ahat == t.err_ahat);

  std::stringstream bad("n,x,a\n0,0,1\n");
  CHECK_THROWS_AS(read_table_csv(bad), NumericalError);
  std::stringstream ragged("n,x,a,a_hat,err_a,err_ahat\n0,0,1,1,0,0\n1,0,1,1,0,0\n1,0.5,1,1,0,0\n");
  CHECK_THROWS_AS(read_table_csv(ragged), NumericalError);
}

TEST_CASE("grids") {
  const std::vector<double> g = make_grid(0.0, 2.5, 0.1);
  CHECK(g.size() == 26);
  CHECK(g.back() == doctest::Approx(2.5));
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), NumericalError);
}
