#include "eis4/special_numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace eis4 {

int chi(Character c, long n) {
  const long r = ((n % 4) + 4) % 4;
  if (r % 2 == 0) return 0;
  if (c == Character::chi0) return 1;
  return r == 1 ? 1 : -1;
}

namespace {

// Grow-only caches guarded by a mutex; entries never change once written.
struct BernoulliCache {
  std::mutex mu;
  std::vector<Rational> b{Rational(1)};  // B^-_n convention internally
};

struct EulerCache {
  std::mutex mu;
  std::vector<Integer> e{Integer(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

EulerCache& euler_cache() {
  static EulerCache cache;
  return cache;
}

template <class F>
Integer divisor_sum(long n, F weight) {
  if (n < 1) throw std::invalid_argument("divisor sum needs n >= 1");
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += weight(d);
    if (d != n / d) s += weight(n / d);
  }
  return s;
}

Integer ipow(long base, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  if (n == 1) return make_rational(1, 2);
  if (n > 1 && n % 2 == 1) return 0;
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mu);
  auto& b = cache.b;
  for (long m = static_cast<long>(b.size()); m <= n; ++m) {
    Rational s = 0;
    for (long j = 0; j < m; ++j)
      if (b[j] != 0) s += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-s / (m + 1));
  }
  return b[n];
}

Integer euler_number(long n) {
  if (n < 0) throw std::invalid_argument("euler index must be >= 0");
  if (n % 2 == 1) return 0;
  auto& cache = euler_cache();
  std::lock_guard lock(cache.mu);
  auto& e = cache.e;  // e[m] = E_{2m}
  for (long m = static_cast<long>(e.size()); 2 * m <= n; ++m) {
    Integer s = 0;
    for (long j = 0; j < m; ++j) s += binomial(2 * m, 2 * j) * e[j];
    e.push_back(-s);
  }
  return e[n / 2];
}

Rational euler_poly(long k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("euler polynomial degree must be >= 0");
  const Rational y = x - make_rational(1, 2);
  Rational s = 0;
  for (long n = 0; n <= k; n += 2)
    s += Rational(binomial(k, n)) * Rational(euler_number(n)) * pow2(-n) * pow_int(y, k - n);
  return s;
}

Rational power_sum_chi0(long n, long k) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("power_sum_chi0 needs even n >= 2");
  if (k < 1) throw std::invalid_argument("power_sum_chi0 needs k >= 1");
  Rational s = 0;
  const Rational nn(n);
  for (long j = 0; j < k; ++j)
    s += Rational(binomial(k, j)) * bernoulli(j) * (1 - pow2(j - 1)) * pow_int(nn, k - j);
  return s / k;
}

Rational ell0_even(long k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("ell0_even needs even k >= 2");
  return -(1 - pow2(-k)) * bernoulli(k) / (2 * Rational(factorial(k)));
}

GaussianRational ell4_odd(long k) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("ell4_odd needs odd k >= 1");
  const Rational v = Rational(euler_number(k - 1)) * pow2(-(2 * k + 1)) / Rational(factorial(k - 1));
  return {Rational(0), -v};
}

Integer sigma_chi4(long j, long n) {
  return divisor_sum(n, [j](long d) { return Integer(chi4(d) * ipow(d, j)); });
}

Integer sigma_chi0(long j, long n) {
  return divisor_sum(n, [j](long d) { return d % 2 ? ipow(d, j) : Integer(0); });
}

Integer sigma_chi4_shift(long j, long n) {
  return divisor_sum(n, [j](long d) { return Integer(chi4(d + 1) * ipow(d, j)); });
}

UniPoly b0_poly(long n) {
  if (n < 0) throw std::invalid_argument("b0_poly degree must be >= 0");
  std::vector<Rational> c(n + 1, Rational(0));
  for (long j = 0; j <= n; j += 2) c[n - j] = Rational(binomial(n, j)) * bernoulli(j);
  return UniPoly(std::move(c));
}

}  // namespace eis4
