#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eis4/eisenstein.hpp"
#include "eis4/qseries.hpp"

#include <cstdlib>
#include <random>

using namespace eis4;

namespace {

GSeries random_series(std::mt19937& rng, int N, bool with_constant = true) {
  std::uniform_int_distribution<int> d(-5, 5);
  GSeries s(N);
  for (int n = 1; n <= N; ++n) s[n] = GaussianRational(make_rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng)));
  if (with_constant) s.set_exact_constant(GaussianRational(d(rng), d(rng)));
  return s;
}

GSeries one_series(int N) {
  GSeries s(N);
  s.set_exact_constant(GaussianRational(1));
  return s;
}

}  // namespace

TEST_CASE("truncation and indexing") {
  CHECK_THROWS_AS(GSeries(0), std::invalid_argument);
  GSeries s(5);
  CHECK_THROWS_AS(s[0], std::out_of_range);
  CHECK_THROWS_AS(s[6], std::out_of_range);
  CHECK(constant_kind(s.constant()) == "absent");
  CHECK_THROWS_AS(s.exact_constant(), std::domain_error);
  CHECK_THROWS_AS(series_add(GSeries(3), GSeries(4)), std::invalid_argument);
}

TEST_CASE("default truncation honors EIS4_TERMS") {
  unsetenv("EIS4_TERMS");
  CHECK(default_truncation() == 40);
  setenv("EIS4_TERMS", "17", 1);
  CHECK(default_truncation() == 17);
  setenv("EIS4_TERMS", "junk", 1);
  CHECK(default_truncation() == 40);
  unsetenv("EIS4_TERMS");
}

TEST_CASE("addition examples") {
  std::mt19937 rng(7);
  const GSeries a = random_series(rng, 10);
  GSeries zero(10);
  zero.set_exact_constant(GaussianRational(0));
  CHECK(series_add(a, zero) == a);

  GSeries x(4), y(4);
  x[1] = 1;
  x[2] = 1;
  y[1] = 1;
  y[2] = -1;
  const GSeries s = series_add(x, y);
  CHECK(s[1] == GaussianRational(2));
  CHECK(s[2] == GaussianRational(0));

  const LSeries h3 = eis_H(3, 20);
  const LSeries d = series_add(h3, series_scale(h3, GaussianRational(-1)));
  CHECK(d.nonconstant_is_zero());
  CHECK(d.exact_constant().is_zero());
}

TEST_CASE("multiplication examples") {
  std::mt19937 rng(11);
  const GSeries a = random_series(rng, 12);
  CHECK(series_mul(a, one_series(12)) == a);

  GSeries x(3), y(3);
  x.set_exact_constant(GaussianRational(2));
  y.set_exact_constant(GaussianRational(Rational(0), Rational(3)));
  x[1] = 1;
  y[1] = 1;
  const GSeries p = series_mul(x, y);
  CHECK(p.exact_constant() == GaussianRational(Rational(0), Rational(6)));
  CHECK(p[1] == GaussianRational(Rational(2), Rational(3)));
  CHECK(p[2] == GaussianRational(1));
  CHECK(p[3] == GaussianRational(0));
}

TEST_CASE("(4i H~_1)^2 gives the four-squares counts r4(n)") {
  const int N = 20;
  const LSeries t2 = series_scale(eis_H(1, N), GaussianRational(4) * GaussianRational::i());
  const LSeries t4 = series_mul(t2, t2);
  CHECK(t4.exact_constant() == LForm(1));
  for (int n = 1; n <= N; ++n) {
    long count = 0;
    for (int a = -5; a <= 5; ++a)
      for (int b = -5; b <= 5; ++b)
        for (int c = -5; c <= 5; ++c)
          for (int d = -5; d <= 5; ++d)
            if (a * a + b * b + c * c + d * d == n) ++count;
    CHECK_MESSAGE(t4[n] == LForm(count), "n = " << n);
  }
}

TEST_CASE("opaque constants") {
  LSeries a(4), b(4);
  a.set_constant(ConstOpaqueT2{1, 2});
  CHECK(constant_kind(a.constant()) == "opaque_t2");
  CHECK(constant_kind(series_add(a, LSeries(4)).constant()) == "opaque_t2");
  b.set_exact_constant(LForm(1));
  CHECK_THROWS_AS(series_add(a, b), std::domain_error);
  CHECK_THROWS_AS(series_scale(a, GaussianRational(2)), std::domain_error);
  CHECK_THROWS_AS(series_mul(a, b), std::domain_error);
  CHECK(constant_kind(series_scale(a, GaussianRational(1)).constant()) == "opaque_t2");

  // Leven(2) * Leven(4) has no LForm representation
  const LSeries p = series_mul(eis_H(2, 6), eis_H(4, 6));
  CHECK(constant_kind(p.constant()) == "opaque_product");
}

TEST_CASE("imaginary part examples") {
  GSeries real(5);
  for (int n = 1; n <= 5; ++n) real[n] = GaussianRational(n);
  CHECK(series_imag(real).nonconstant_is_zero());

  LSeries s(3);
  s[1] = LForm(LGen::zodd(3), GaussianRational::i());
  CHECK(series_imag(s)[1] == LForm(LGen::zodd(3), GaussianRational(1)));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 8;
    const GSeries a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_imag(series_add(a, b)) == series_add(series_imag(a), series_imag(b)));
  }
}

TEST_CASE("coefficient n of a product only sees indices <= n") {
  std::mt19937 rng(99);
  const GSeries a = random_series(rng, 10), b = random_series(rng, 10);
  GSeries a2 = a, b2 = b;
  a2[10] = GaussianRational(12345);
  b2[9] = GaussianRational(-777);
  const GSeries p = series_mul(a, b), p2 = series_mul(a2, b2);
  for (int n = 1; n <= 8; ++n) CHECK(p[n] == p2[n]);
  CHECK(!(p[10] == p2[10]));
}

TEST_CASE("lift keeps coefficients and constant") {
  std::mt19937 rng(5);
  const GSeries a = random_series(rng, 6);
  const LSeries l = lift(a);
  for (int n = 1; n <= 6; ++n) CHECK(l[n] == LForm(a[n]));
  CHECK(l.exact_constant() == LForm(a.exact_constant()));
}
