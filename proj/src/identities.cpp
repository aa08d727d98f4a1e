#include "eis4/identities.hpp"

#include "eis4/special_numbers.hpp"

#include <stdexcept>

namespace eis4 {

Rational bernoulli_euler_lhs(long k) { return bernoulli(k) / k * (1 - pow2(-k)); }

Rational bernoulli_euler_rhs(long k) {
  Rational s = 0;
  for (long r = 1; r <= k - 1; ++r)
    s += Rational(binomial(k - 2, r - 1) * euler_number(k - r - 1) * euler_number(r - 1));
  return s * pow2(-2 * k);
}

Rational euler_shift_sum_lhs(long n, long k) {
  Rational s = 0;
  for (long w = 1; w < n; ++w)
    if (chi4(w + 1) != 0) s += chi4(w + 1) * pow_int(make_rational(w, 2), k);
  return s;
}

Rational euler_shift_sum_rhs(long n, long k) {
  return Rational(chi4(n)) / 2 * euler_poly(k, make_rational(n + 1, 2)) -
         (euler_poly(k, Rational(1)) - euler_poly(k, Rational(0))) / 4;
}

bool binomial_identity_holds(long a, long b, long mu) {
  Integer s = 0;
  for (long nu = 0; nu <= mu; ++nu) {
    const Integer t = binomial(a + b - nu, a) * binomial(mu, nu);
    s += nu % 2 ? Integer(-t) : t;
  }
  return s == binomial(a + b - mu, b);
}

namespace {

void require_size(long k1, long k2, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const auto need = static_cast<std::size_t>(k1 + k2);
  if (k1 < 1 || k2 < 1 || a.size() < need || b.size() < need)
    throw std::invalid_argument("sequence identity needs k1, k2 >= 1 and k1 + k2 terms");
}

}  // namespace

bool sequence_identity_first_holds(long k1, long k2, const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) {
  require_size(k1, k2, a, b);
  Rational lhs = 0;
  for (long i = 0; i <= k2 - 1; ++i) {
    Rational inner = 0;
    for (long j = 0; j <= k1 + i - 1; ++j) {
      const Rational t = Rational(binomial(k2 - i + j - 1, j)) * a[k2 - i + j] * b[k1 + i - j];
      inner += (k2 - i) % 2 ? Rational(-t) : t;
    }
    lhs += Rational(binomial(k1 + i - 1, k1 - 1)) * inner;
  }
  Rational rhs = 0;
  for (long i = 0; i <= k1 - 1; ++i) rhs -= Rational(binomial(k2 + i - 1, k2 - 1)) * a[k1 - i] * b[k2 + i];
  return lhs == rhs;
}

bool sequence_identity_second_holds(long k1, long k2, const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
  require_size(k1, k2, a, b);
  Rational lhs = 0;
  for (long i = 0; i <= k2 - 1; ++i) {
    Rational inner = 0;
    for (long j = 0; j <= k2 - i - 1; ++j) {
      const Rational t = Rational(binomial(k1 + i + j - 1, j)) * a[k1 + i + j] * b[k2 - i - j];
      inner += j % 2 ? Rational(-t) : t;
    }
    lhs += Rational(binomial(k1 + i - 1, k1 - 1)) * inner;
  }
  return lhs == a[k1] * b[k2];
}

}  // namespace eis4
