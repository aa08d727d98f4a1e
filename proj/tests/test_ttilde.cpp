#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eis4/special_numbers.hpp"
#include "eis4/ttilde_numeric.hpp"

#include <cmath>
#include <numbers>

using namespace eis4;

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;
const double kPi = std::numbers::pi;

double dist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("alternating series accelerators") {
  auto harmonic = [](int k) { return 1.0 / (k + 1); };
  CHECK(std::abs(alternating_sum_cvz(harmonic, 40) - std::log(2.0)) < 1e-15);
  CHECK(std::abs(alternating_sum_euler(harmonic, 20, 50) - std::log(2.0)) < 1e-14);
  auto leibniz = [](int k) { return 1.0 / (2 * k + 1); };
  CHECK(std::abs(alternating_sum_cvz(leibniz, 40) - kPi / 4) < 1e-15);
}

TEST_CASE("Dirichlet L-values") {
  CHECK(std::abs(l_value_chi4(1) - kPi / 4) < 1e-15);
  CHECK(std::abs(l_value_chi4(2) - kCatalan) < 1e-15);
  CHECK(std::abs(l_value_chi4(3) - std::pow(kPi, 3) / 32) < 1e-15);
  CHECK(std::abs(l_value_chi0(2) - kPi * kPi / 8) < 1e-15);
  CHECK(std::abs(l_value_chi0(4) - std::pow(kPi, 4) / 96) < 1e-15);
  CHECK_THROWS_AS(l_value_chi0(1), std::invalid_argument);
}

TEST_CASE("generator values match the exact normalized values") {
  // (2 pi i)^{-4} L(chi0, 4) from its float generator route equals ell0_even(4)
  for (int m = 2; m <= 12; m += 2) {
    const double exact = ell0_even(m).get_d();
    const double viaL = std::pow(2 * kPi, -m) * l_value_chi0(m) * (m % 4 == 0 ? 1 : -1);
    CHECK(std::abs(exact - viaL) < 1e-15 * std::abs(exact) + 1e-300);
  }
  CHECK(generator_value(LGen::zodd(1)) == free_constant_value());
  CHECK(std::abs(generator_value(LGen::leven(2)) + kCatalan / (4 * kPi * kPi)) < 1e-16);
}

TEST_CASE("single values") {
  const NumericTValue t1 = ttilde_single(1);
  CHECK(t1.method == NumericMethod::closed_form);
  CHECK(t1.est_error == 0);
  CHECK(dist(t1.value, {0, -0.25}) == 0);
  CHECK(dist(ttilde_single(3).value, {0, 1.0 / 128}) == 0);
  const NumericTValue t2 = ttilde_single(2);
  CHECK(t2.method == NumericMethod::accelerated_sum);
  CHECK(dist(t2.value, -kCatalan / (2 * kPi * kPi)) < 1e-15);
  // odd weights against a direct accelerated sum of 2 (2 pi i)^{-k} L(chi4, k)
  for (int k = 1; k <= 11; k += 2) {
    const std::complex<double> unit = std::pow(std::complex<double>(0, 1), -k);
    const std::complex<double> series = 2.0 * unit * std::pow(2 * kPi, -k) * l_value_chi4(k);
    CHECK(dist(ttilde_single(k).value, series) < 1e-10);
  }
  CHECK_THROWS_AS(ttilde_single(0), std::invalid_argument);
}

TEST_CASE("double values") {
  const NumericTValue t11 = ttilde_double(1, 1, 1e-12);
  CHECK(dist(t11.value, -1.0 / 32) < 1e-14);
  CHECK(t11.est_error <= 1e-12);
  CHECK(ttilde_double(2, 3, 1e-8).est_error <= 1e-8);
  CHECK_THROWS_AS(ttilde_double(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(ttilde_double(0, 3), std::invalid_argument);
}

TEST_CASE("constant-term shuffle holds numerically") {
  for (int K = 2; K <= 8; ++K)
    for (int k1 = 1; k1 < K; ++k1) {
      const int k2 = K - k1;
      const std::complex<double> lhs = ttilde_single(k1).value * ttilde_single(k2).value;
      std::complex<double> rhs = 0;
      for (int p = 1; p <= K - 1; ++p) {
        const double c = Integer(binomial(p - 1, k1 - 1) + binomial(p - 1, k2 - 1)).get_d();
        if (c != 0) rhs += c * ttilde_double(K - p, p).value;
      }
      CHECK_MESSAGE(dist(lhs, rhs) < 1e-12, k1 << "," << k2);
    }
}

TEST_CASE("constant terms of the G~ decomposition") {
  for (int k = 4; k <= 12; k += 2) {
    std::complex<double> rhs = 0.5 * ttilde_double(k - 1, 1).value;
    for (int p = 1; p <= k - 1; ++p) rhs += std::pow(2.0, k - 2 - p) * ttilde_double(p, k - p).value;
    CHECK(dist(rhs, (k - 1) * ell0_even(k).get_d()) < 1e-14);
  }
}

TEST_CASE("relation residuals") {
  for (int k = 6; k <= 12; k += 2)
    for (int j = 1; j <= (k - 2) / 4; ++j) {
      const RelationNumericReport r = verify_relation_numeric(k, j, 1e-8);
      CHECK_MESSAGE(r.pass, k << "," << j << " residual " << std::abs(r.residual));
      CHECK(std::abs(r.residual) < 1e-12 * r.scale + 1e-15);
    }
  const RelationNumericReport lit = verify_relation_numeric(6, 1, 1e-8, true);
  CHECK_FALSE(lit.pass);
  CHECK(std::abs(lit.residual) > 1e3 * lit.budget);
}
