#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eis4/eisenstein.hpp"
#include "eis4/special_numbers.hpp"
#include "eis4/verifier.hpp"

using namespace eis4;

namespace {

const GaussianRational I = GaussianRational::i();

LForm scalar(const Rational& re, const Rational& im = 0) { return LForm(GaussianRational(re, im)); }

// Brute force of the double sum behind omega_double_sum, written from its definition.
GaussianRational omega_brute(int k1, int k2, int n) {
  Rational s = 0;
  for (int m2 = 2; m2 <= n; ++m2)
    for (int n2 = 1; n2 * m2 < n; ++n2)
      for (int m1 = 1; m1 < m2; ++m1)
        for (int n1 = 1; n1 * m1 + n2 * m2 <= n; ++n1)
          if (n1 * m1 + n2 * m2 == n) {
            Integer t = chi4(n1 + 1) * chi0(n2);
            Integer p1, p2;
            mpz_ui_pow_ui(p1.get_mpz_t(), static_cast<unsigned long>(n1), static_cast<unsigned long>(k1 - 1));
            mpz_ui_pow_ui(p2.get_mpz_t(), static_cast<unsigned long>(n2), static_cast<unsigned long>(k2 - 1));
            s += Rational(t * p1 * p2);
          }
  if (k1 == 1)
    for (int m2 = 2; m2 <= n; ++m2)
      if (n % m2 == 0) {
        const int n2 = n / m2;
        Integer p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), static_cast<unsigned long>(n2), static_cast<unsigned long>(k2 - 1));
        s += Rational((m2 - 1) * chi0(n2) * p2) / 2;
      }
  return s;
}

}  // namespace

TEST_CASE("normalized L-value forms") {
  CHECK(ell0(2) == scalar(make_rational(-1, 32)));
  CHECK(ell0(3) == LForm(LGen::zodd(3), I));  // i^{-3} = i
  CHECK(ell0(1) == LForm(LGen::zodd(1), -I));
  CHECK(ell4(1) == scalar(0, make_rational(-1, 8)));
  CHECK(ell4(2) == LForm(LGen::leven(2), 1));
  CHECK_THROWS_AS(ell0(0), std::invalid_argument);
}

TEST_CASE("H~_k examples") {
  const LSeries h1 = eis_H(1, 10);
  CHECK(h1.exact_constant() == scalar(0, make_rational(-1, 4)));
  const LSeries h3 = eis_H(3, 10);
  CHECK(h3.exact_constant() == scalar(0, make_rational(1, 128)));
  CHECK(h3[1] == scalar(0, make_rational(-1, 32)));
  CHECK(eis_H(2, 4).exact_constant() == LForm(LGen::leven(2), 2));
  CHECK_THROWS_AS(eis_H(0, 4), std::invalid_argument);
}

TEST_CASE("4i H~_1 coefficients are sums of two squares") {
  const int N = 100;
  const LSeries t = series_scale(eis_H(1, N), GaussianRational(4) * I);
  CHECK(t.exact_constant() == LForm(1));
  const long expected_head[] = {4, 4, 0, 4, 8};
  for (int n = 1; n <= 5; ++n) CHECK(t[n] == LForm(expected_head[n - 1]));
  for (int n = 1; n <= N; ++n) {
    long r2 = 0;
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b)
        if (a * a + b * b == n) ++r2;
    CHECK_MESSAGE(t[n] == LForm(r2), "n = " << n);
  }
}

TEST_CASE("G~_k examples") {
  const LSeries g4 = eis_G(4, 10);
  CHECK(g4.exact_constant() == scalar(make_rational(1, 1536)));
  CHECK(g4[1].is_zero());
  CHECK(g4[2] == scalar(make_rational(-1, 96)));
  CHECK_THROWS_AS(eis_G(5, 10), std::invalid_argument);
  CHECK_THROWS_AS(eis_G(2, 10), std::invalid_argument);
}

TEST_CASE("H~_{k1,k2} constant is the opaque double value") {
  const LSeries h = eis_H2(2, 3, 5);
  CHECK(constant_kind(h.constant()) == "opaque_t2");
  CHECK(std::get<ConstOpaqueT2>(h.constant()) == ConstOpaqueT2{2, 3});
}

TEST_CASE("2 H~_{1,1} = H~_1^2 away from the constant") {
  const int N = 30;
  const LSeries sq = series_mul(eis_H(1, N), eis_H(1, N));
  const LSeries twice = series_scale(eis_H2(1, 1, N).without_constant(), GaussianRational(2));
  CHECK(!first_mismatch(sq, twice));
}

TEST_CASE("free constant never appears in H~_{k1,k2}") {
  for (int K = 2; K <= 10; ++K)
    for (int k1 = 1; k1 < K; ++k1) {
      const LSeries h = eis_H2(k1, K - k1, 30);
      for (int n = 1; n <= 30; ++n) REQUIRE(h[n].coeff(LGen::zodd(1)).is_zero());
    }
}

TEST_CASE("support bound on generators") {
  for (int K = 2; K <= 10; ++K)
    for (int k1 = 1; k1 < K; ++k1) {
      const LSeries h = eis_H2(k1, K - k1, 20);
      for (int n = 1; n <= 20; ++n)
        for (const auto& [g, c] : h[n].terms()) CHECK(g.m <= K);
    }
}

TEST_CASE("omega double sum") {
  const GSeries w = omega_double_sum(2, 3, 12);
  CHECK(w[1].is_zero());
  CHECK(w[2].is_zero());
  CHECK(w[3].is_zero());
  CHECK(w[4] == GaussianRational(-2));
  CHECK(w.exact_constant().is_zero());
  CHECK(omega_double_sum(1, 3, 5)[2] == GaussianRational(make_rational(1, 2)));
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 1; k2 <= 3; ++k2) {
      const GSeries o = omega_double_sum(k1, k2, 25);
      for (int n = 1; n <= 25; ++n) CHECK_MESSAGE(o[n] == omega_brute(k1, k2, n), k1 << "," << k2 << " n=" << n);
    }
}

TEST_CASE("diagonal product closed form") {
  for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {4, 4}, {1, 2}, {3, 2}, {5, 1}}) {
    const VerifyReport r = verify_diagonal_product(a, b, 20);
    CHECK_MESSAGE(r.pass, a << "," << b);
  }
}

// Imaginary parts of H~_{r,k-r} assembled from the h_j / h~_j display:
//   h_j  has q^n coefficient (-2 pi i)^j 2^{1-j}/(j-1)! sigma_chi0(j-1, n)
//   h~_j has q^n coefficient (-2 pi i)^j i 2^{1-j}/(j-1)! sigma_chi4(j-1, n)
// so 4/(2 pi i)^k L(chi, k-j) (-2 pi i)^j = 4 (-1)^j ell(k-j).
TEST_CASE("imaginary part matches the h / h~ display") {
  for (int k = 3; k <= 10; ++k)
    for (int r = 1; r <= k - 1; ++r) {
      const int N = 15;
      const LSeries im = series_imag(eis_H2(r, k - r, N));
      for (int n = 1; n <= N; ++n) {
        LForm disp;
        for (int j = 1; j <= k - 2; ++j) {
          const Rational common = pow2(-j) * pow2(1 - j) / Rational(factorial(j - 1)) * (j % 2 ? -4 : 4);
          const bool h_slot = (k % 2 == 0) ? (j % 2 == 1) : (j % 2 == 0);
          if (h_slot && j != k - r) {
            const Rational a = ((r - 1) % 2 ? -1 : 1) * Rational(binomial(k - 1 - j, r - 1));
            disp += ell0(k - j) * GaussianRational(a * common * Rational(sigma_chi0(j - 1, n)));
          }
          if (!h_slot) {
            const Rational b = ((r - j) % 2 ? -1 : 1) * Rational(binomial(k - j - 1, k - r - 1));
            disp += ell4(k - j) * (I * GaussianRational(b * common * Rational(sigma_chi4(j - 1, n))));
          }
        }
        REQUIRE_MESSAGE(lform_real(disp).is_zero(), "display not purely imaginary");
        CHECK_MESSAGE(im[n] == lform_imag(disp), "k=" << k << " r=" << r << " n=" << n);
      }
    }
}

TEST_CASE("weights are validated") {
  CHECK_THROWS_AS(eis_H2(0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(eis_H2(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(block_coefficient({BlockSpec::Kind::g_tilde, 1}, 3), std::invalid_argument);
  CHECK(block_coefficient({BlockSpec::Kind::h_tilde, 3}, 3) == -8);
}
