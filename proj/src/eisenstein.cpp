#include "eis4/eisenstein.hpp"

#include "eis4/special_numbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace eis4 {

namespace {

GaussianRational i_pow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return GaussianRational::i();
    case 2: return -1;
    default: return -GaussianRational::i();
  }
}

Rational sign(long e) { return e % 2 == 0 ? 1 : -1; }

Rational inv_factorial(long n) { return 1 / Rational(factorial(n)); }

Integer int_pow(long base, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

void require_positive(int k, const char* what) {
  if (k < 1) throw std::invalid_argument(std::string(what) + " needs weight >= 1");
}

void require_truncation(int N) {
  if (N < 1) throw std::invalid_argument("truncation must be >= 1");
}

}  // namespace

Integer block_coefficient(const BlockSpec& b, long n) {
  if (b.m < 1 || (b.kind == BlockSpec::Kind::g_tilde && b.m < 2))
    throw std::invalid_argument("block weight out of range");
  switch (b.kind) {
    case BlockSpec::Kind::h: return sigma_chi0(b.m - 1, n);
    case BlockSpec::Kind::h_tilde: return sigma_chi4(b.m - 1, n);
    case BlockSpec::Kind::g_tilde: return sigma_chi4_shift(b.m - 1, n);
  }
  return 0;
}

LForm ell0(int m) {
  require_positive(m, "ell0");
  if (m % 2 == 0) return LForm(GaussianRational(ell0_even(m)));
  return LForm(LGen::zodd(m), i_pow(-m));
}

LForm ell4(int m) {
  require_positive(m, "ell4");
  if (m % 2 == 1) return LForm(ell4_odd(m));
  return LForm(LGen::leven(m), 1);
}

LSeries eis_H(int k, int N) {
  require_positive(k, "eis_H");
  require_truncation(N);
  LSeries s(N);
  s.set_exact_constant(ell4(k) * GaussianRational(2));
  const GaussianRational pre = GaussianRational::i() * Rational(sign(k) * pow2(2 - 2 * k) * inv_factorial(k - 1));
  for (int n = 1; n <= N; ++n) s[n] = LForm(pre * GaussianRational(Rational(sigma_chi4(k - 1, n))));
  return s;
}

LSeries eis_G(int k, int N) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("eis_G needs even k >= 4");
  require_truncation(N);
  LSeries s(N);
  s.set_exact_constant(LForm(GaussianRational(ell0_even(k))));
  const Rational pre = pow2(1 - 2 * k) * inv_factorial(k - 1);
  for (int n = 1; n <= N; ++n) s[n] = LForm(GaussianRational(pre * Rational(sigma_chi4_shift(k - 1, n))));
  return s;
}

GSeries omega_double_sum(int k1, int k2, int N) {
  require_positive(k1, "omega_double_sum");
  require_positive(k2, "omega_double_sum");
  require_truncation(N);
  std::vector<Integer> wa(N + 1), wb(N + 1);
  for (int n = 1; n <= N; ++n) {
    wa[n] = chi4(n + 1) * int_pow(n, k1 - 1);
    wb[n] = chi0(n) * int_pow(n, k2 - 1);
  }
  std::vector<Integer> omega(N + 1, Integer(0));
  for (int m2 = 2; m2 <= N; ++m2)
    for (int n2 = 1; n2 * m2 < N; n2 += 2) {
      const int rest = N - n2 * m2;
      // every target n = n1 m1 + n2 m2 <= N with 1 <= m1 < m2
      for (int m1 = 1; m1 < m2 && m1 <= rest; ++m1)
        for (int n1 = 1; n1 * m1 <= rest; ++n1) {
          if (wa[n1] == 0) continue;
          omega[n1 * m1 + n2 * m2] += wa[n1] * wb[n2];
        }
    }
  GSeries s(N);
  s.set_exact_constant(0);
  for (int n = 1; n <= N; ++n) {
    Rational v(omega[n]);
    if (k1 == 1) {
      Integer extra = 0;
      for (int m2 = 2; m2 <= n; ++m2)
        if (n % m2 == 0) extra += (m2 - 1) * wb[n / m2];
      v += Rational(extra) / 2;
    }
    s[n] = GaussianRational(v);
  }
  return s;
}

LSeries eis_H2(int k1, int k2, int N) {
  require_positive(k1, "eis_H2");
  require_positive(k2, "eis_H2");
  require_truncation(N);
  const int K = k1 + k2;

  // Each term is a fixed form times an integer divisor sum in n.
  struct Term {
    LForm pre;
    BlockSpec block;
  };
  std::vector<Term> terms;

  // -2^{-k2} L(chi0, k1) h_{k2}
  terms.push_back({ell0(k1) * GaussianRational(Rational(-4) * pow2(-k2) * sign(k2) * pow2(1 - k2) *
                                               inv_factorial(k2 - 1)),
                   {BlockSpec::Kind::h, k2}});
  // sum_j (-1)^{k1-1} 2^{-(k2-j)} binom(k1+j-1, k1-1) L(chi0, k1+j) h_{k2-j}
  for (int j = 0; j <= k2 - 1; ++j) {
    const int s = k2 - j;
    const Rational c = Rational(4) * sign(k1 - 1) * pow2(-s) * Rational(binomial(k1 + j - 1, k1 - 1)) * sign(s) *
                       pow2(1 - s) * inv_factorial(s - 1);
    terms.push_back({ell0(k1 + j) * GaussianRational(c), {BlockSpec::Kind::h, s}});
  }
  // sum_j (-1)^j 2^{-(k1-j)} binom(k2+j-1, k2-1) L(chi4, k2+j) h~_{k1-j}
  for (int j = 0; j <= k1 - 1; ++j) {
    const int s = k1 - j;
    const Rational c = Rational(4) * sign(j) * pow2(-s) * Rational(binomial(k2 + j - 1, k2 - 1)) * sign(s) *
                       pow2(1 - s) * inv_factorial(s - 1);
    terms.push_back({ell4(k2 + j) * (GaussianRational::i() * c), {BlockSpec::Kind::h_tilde, s}});
  }

  const Rational double_pre =
      -sign(K) * pow2(4 - 2 * K) * inv_factorial(k1 - 1) * inv_factorial(k2 - 1);
  const GSeries omega = omega_double_sum(k1, k2, N);

  LSeries out(N);
  out.set_constant(ConstOpaqueT2{k1, k2});
  for (int n = 1; n <= N; ++n) {
    LForm v(GaussianRational(double_pre * omega[n].re()));
    for (const auto& t : terms) {
      const Integer d = block_coefficient(t.block, n);
      if (d != 0) v += t.pre * GaussianRational(Rational(d));
    }
    out[n] = std::move(v);
  }
  return out;
}

VerifyReport verify_diagonal_product(int k1, int k2, int N) {
  require_positive(k1, "verify_diagonal_product");
  require_positive(k2, "verify_diagonal_product");
  require_truncation(N);
  const int K = k1 + k2;
  VerifyReport rep;
  rep.claim = "diagonal-product";
  rep.params = {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"terms", std::to_string(N)}};

  // Psi(n) = sum_{n1 + n2 = n} chi4(n1) chi4(n2) n1^{k1-1} n2^{k2-1}
  std::vector<Integer> psi(N + 1, Integer(0));
  for (int n = 2; n <= N; ++n)
    for (int n1 = 1; n1 < n; ++n1) {
      const int c = chi4(n1) * chi4(n - n1);
      if (c != 0) psi[n] += c * int_pow(n1, k1 - 1) * int_pow(n - n1, k2 - 1);
    }
  const Rational lhs_pre = -pow2(2 - K) * inv_factorial(k1 - 1) * inv_factorial(k2 - 1);

  // Closed form: a list of (coefficient, weight s) pairs multiplying 2^{1-s}/(s-1)! sigma_sh_{s-1}.
  std::vector<std::pair<Rational, int>> blocks;
  blocks.emplace_back(Rational(1), K);
  for (int j = 0; j <= k1 - 1; ++j) {
    const int idx = k2 + j;
    const Rational c = sign(k2) * inv_factorial(j) * inv_factorial(k2 - 1) * bernoulli(idx) / idx * (pow2(1 - idx) - 1);
    if (c != 0) blocks.emplace_back(-c, k1 - j);
  }
  for (int j = 0; j <= k2 - 1; ++j) {
    const int idx = k1 + j;
    const Rational c = sign(j) * inv_factorial(j) * inv_factorial(k1 - 1) * bernoulli(idx) / idx * (pow2(1 - idx) - 1);
    if (c != 0) blocks.emplace_back(-c, k2 - j);
  }

  rep.pass = true;
  for (int n = 1; n <= N; ++n) {
    Integer diag = 0;
    for (int m = 1; m <= n; ++m)
      if (n % m == 0) diag += psi[n / m];
    const Rational lhs = lhs_pre * Rational(diag);
    Rational rhs = 0;
    for (const auto& [c, s] : blocks)
      rhs += c * pow2(1 - s) * inv_factorial(s - 1) * Rational(sigma_chi4_shift(s - 1, n));
    if (lhs != rhs) {
      rep.pass = false;
      rep.first_failure = Mismatch{n, LForm(GaussianRational(lhs)), LForm(GaussianRational(rhs))};
      rep.checked_through = n - 1;
      return rep;
    }
  }
  rep.checked_through = N;
  return rep;
}

}  // namespace eis4
