#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eis4/special_numbers.hpp"
#include "eis4/identities.hpp"

#include <random>

using namespace eis4;

TEST_CASE("characters") {
  CHECK(chi0(1) == 1);
  CHECK(chi0(4) == 0);
  CHECK(chi0(-3) == 1);
  CHECK(chi4(1) == 1);
  CHECK(chi4(3) == -1);
  CHECK(chi4(-1) == -1);
  CHECK(chi4(6) == 0);
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      CHECK(chi4(a * b) == chi4(a) * chi4(b));
      CHECK(chi0(a * b) == chi0(a) * chi0(b));
    }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  for (long n = 3; n < 60; n += 2) CHECK(bernoulli(n) == 0);
  // Generating-function check: sum_{j<=n} binom(n+1, j) B_j = n + 1 with B_1 = +1/2.
  for (long n = 1; n < 40; ++n) {
    Rational s = 0;
    for (long j = 0; j <= n; ++j) s += Rational(binomial(n + 1, j)) * bernoulli(j);
    CHECK(s == n + 1);
  }
}

TEST_CASE("euler numbers and polynomials") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(1) == 0);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  for (long n = 1; n < 40; n += 2) CHECK(euler_number(n) == 0);
  for (long k = 0; k < 6; ++k) CHECK(euler_poly(0, Rational(k)) == 1);
  CHECK(euler_poly(1, Rational(7)) == make_rational(13, 2));
  const Rational third = make_rational(1, 3);
  CHECK(euler_poly(3, 1 - third) == -euler_poly(3, third));
  // E_k(x) + E_k(x + 1) = 2 x^k
  for (long k = 0; k < 12; ++k)
    for (long p = -3; p <= 3; ++p) {
      const Rational x = make_rational(p, 5);
      CHECK(euler_poly(k, x) + euler_poly(k, x + 1) == 2 * pow_int(x, k));
    }
}

TEST_CASE("power sums over odd integers") {
  CHECK(power_sum_chi0(4, 2) == 4);
  CHECK(power_sum_chi0(2, 1) == 1);
  CHECK(power_sum_chi0(6, 3) == 35);
  CHECK_THROWS_AS(power_sum_chi0(5, 2), std::invalid_argument);
  for (long n = 2; n <= 200; n += 2)
    for (long k = 1; k <= 10; ++k) {
      Integer direct = 0;
      for (long w = 1; w < n; w += 2) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(w), static_cast<unsigned long>(k - 1));
        direct += t;
      }
      CHECK(power_sum_chi0(n, k) == Rational(direct));
    }
}

TEST_CASE("normalized L-values") {
  CHECK(ell0_even(2) == make_rational(-1, 32));
  CHECK(ell0_even(4) == make_rational(1, 1536));
  CHECK_THROWS_AS(ell0_even(3), std::invalid_argument);
  CHECK(ell4_odd(1) == GaussianRational(Rational(0), make_rational(-1, 8)));
  CHECK(ell4_odd(3) == GaussianRational(Rational(0), make_rational(1, 256)));
  CHECK_THROWS_AS(ell4_odd(2), std::invalid_argument);
}

TEST_CASE("divisor sums") {
  CHECK(sigma_chi4(0, 1) == 1);
  CHECK(sigma_chi4(0, 5) == 2);
  CHECK(sigma_chi4(2, 3) == -8);
  CHECK(sigma_chi0(1, 6) == 4);
  CHECK(sigma_chi0(0, 8) == 1);
  CHECK(sigma_chi0(5, 1) == 1);
  CHECK(sigma_chi4_shift(3, 2) == -8);
  CHECK(sigma_chi4_shift(1, 4) == 2);
  for (long n = 1; n < 60; n += 2)
    for (long j = 0; j < 5; ++j) CHECK(sigma_chi4_shift(j, n) == 0);
  // Brute force against the definitions.
  for (long n = 1; n <= 120; ++n)
    for (long j = 0; j <= 4; ++j) {
      Integer s4 = 0, s0 = 0, ssh = 0;
      for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j));
        s4 += chi4(d) * p;
        s0 += chi0(d) * p;
        ssh += chi4(d + 1) * p;
      }
      CHECK(sigma_chi4(j, n) == s4);
      CHECK(sigma_chi0(j, n) == s0);
      CHECK(sigma_chi4_shift(j, n) == ssh);
    }
}

TEST_CASE("even-index Bernoulli polynomial") {
  CHECK(b0_poly(0) == UniPoly({Rational(1)}));
  CHECK(b0_poly(2) == UniPoly({make_rational(1, 6), Rational(0), Rational(1)}));
  CHECK(b0_poly(4) == UniPoly({make_rational(-1, 30), Rational(0), Rational(1), Rational(0), Rational(1)}));
}

TEST_CASE("Bernoulli-Euler convolution identity") {
  CHECK(bernoulli_euler_lhs(4) == make_rational(-1, 128));
  CHECK(bernoulli_euler_rhs(4) == make_rational(-1, 128));
  for (long k = 4; k <= 100; k += 2) CHECK(bernoulli_euler_lhs(k) == bernoulli_euler_rhs(k));
}

TEST_CASE("shifted-character Euler polynomial identity") {
  for (long n = 1; n <= 99; n += 2)
    for (long k = 1; k <= 12; ++k) CHECK(euler_shift_sum_lhs(n, k) == euler_shift_sum_rhs(n, k));
}

TEST_CASE("alternating binomial identity") {
  for (long a = 0; a <= 12; ++a)
    for (long b = 0; b <= 12; ++b)
      for (long mu = 0; mu <= 12 && mu <= a + b; ++mu) CHECK(binomial_identity_holds(a, b, mu));
}

TEST_CASE("sequence identities on random rational data") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  for (long k1 = 1; k1 <= 8; ++k1)
    for (long k2 = 1; k2 <= 8; ++k2) {
      std::vector<Rational> a(k1 + k2 + 1), b(k1 + k2 + 1);
      for (auto& x : a) x = make_rational(num(rng), den(rng));
      for (auto& x : b) x = make_rational(num(rng), den(rng));
      CHECK(sequence_identity_first_holds(k1, k2, a, b));
      CHECK(sequence_identity_second_holds(k1, k2, a, b));
    }
}
