#include "eis4/verifier.hpp"

#include "eis4/eisenstein.hpp"
#include "eis4/special_numbers.hpp"
#include "eis4/ttilde_numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eis4 {

namespace {

using cplx = std::complex<double>;
using Params = std::vector<std::pair<std::string, std::string>>;

VerifyReport compare_series(std::string claim, Params params, const LSeries& lhs, const LSeries& rhs) {
  VerifyReport rep;
  rep.claim = std::move(claim);
  rep.params = std::move(params);
  rep.checked_through = lhs.truncation();
  if (auto n = first_mismatch(lhs, rhs)) {
    rep.first_failure = Mismatch{*n, lhs[*n], rhs[*n]};
    rep.checked_through = *n - 1;
  }
  rep.pass = !rep.first_failure;
  return rep;
}

void require_even_k(int k, const char* what) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument(std::string(what) + " needs even k >= 4");
}

LSeries scaled(const LSeries& s, const Rational& c) { return series_scale(s.without_constant(), GaussianRational(c)); }

// sum_p 2^{k-2-p} H~_{p,k-p} + H~_{k-1,1}/2 with constants dropped.
LSeries g_decomp_rhs(int k, int N) {
  LSeries sum(N);
  for (int p = 1; p <= k - 1; ++p) sum = series_add(sum, scaled(eis_H2(p, k - p, N), pow2(k - 2 - p)));
  return series_add(sum, scaled(eis_H2(k - 1, 1, N), make_rational(1, 2)));
}

cplx int_pow(cplx z, int k) {
  cplx r = 1;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// sum_{j>=0} (c + a + j h)^{-k} for integer a > 0 beyond the direct range, by
// Euler-Maclaurin with derivative corrections through the fifth.
cplx em_tail(cplx c, double a, double h, int k) {
  const cplx x = c + a;
  const cplx inv = 1.0 / x;
  const cplx p = int_pow(inv, k);
  const double kk = k;
  cplx s = p * x / ((kk - 1) * h);  // integral of (c+t)^{-k} from a to infinity, over h
  s += p / 2.0;
  s += (h / 12.0) * kk * p * inv;
  s -= (h * h * h / 720.0) * kk * (kk + 1) * (kk + 2) * p * inv * inv * inv;
  s += (std::pow(h, 5) / 30240.0) * kk * (kk + 1) * (kk + 2) * (kk + 3) * (kk + 4) * p * int_pow(inv, 5);
  return s;
}

// The smallest n > M with n = rho mod h.
long first_above(long M, long rho, long h) {
  long n = M + 1;
  while (((n - rho) % h + h) % h != 0) ++n;
  return n;
}

// Sum over n in a residue class mod h and n < -M of (z+n)^{-k}, rewritten with t = -n.
cplx left_tail(cplx z, long M, long rho, long h, int k) {
  const long t0 = first_above(M, -rho, h);
  const cplx s = em_tail(-z, static_cast<double>(t0), static_cast<double>(h), k);
  return k % 2 == 0 ? s : -s;
}

cplx right_tail(cplx z, long M, long rho, long h, int k) {
  return em_tail(z, static_cast<double>(first_above(M, rho, h)), static_cast<double>(h), k);
}

struct RowSums {
  cplx total_f = 0;        // A(m): sum over all n of f
  cplx total_g = 0;        // B(m)
  cplx diagonal = 0;       // D(m): sum over n1 < n2 of f(n1) g(n2)
};

// f(n) = chi0(n) (z+n)^{-k1}, g(n) = chi4(n-1) (z+n)^{-k2}, z = 4 m tau with m >= 1.
RowSums row_sums(cplx z, long M, int k1, int k2) {
  const cplx f_left = left_tail(z, M, 1, 2, k1);
  const cplx f_right = right_tail(z, M, 1, 2, k1);
  // chi4(n-1) is -1 on n = 0 mod 4 and +1 on n = 2 mod 4
  const cplx g_left = left_tail(z, M, 2, 4, k2) - left_tail(z, M, 0, 4, k2);
  const cplx g_right = right_tail(z, M, 2, 4, k2) - right_tail(z, M, 0, 4, k2);

  RowSums r;
  cplx running = f_left, direct_g = 0;
  for (long n = -M; n <= M; ++n) {
    const cplx x = z + static_cast<double>(n);
    if (n % 2 == 0) {
      const int sgn = chi4(n - 1);
      const cplx g = static_cast<double>(sgn) / int_pow(x, k2);
      direct_g += g;
      r.diagonal += g * running;
    } else {
      running += 1.0 / int_pow(x, k1);
    }
  }
  r.total_f = running + f_right;
  r.total_g = direct_g + g_left + g_right;
  // n2 beyond M sees essentially the whole f-row before it
  r.diagonal += r.total_f * g_right;
  return r;
}

// Sum over 0 < n1 < n2 of chi0(n1) chi4(n2-1) n1^{-k1} n2^{-k2}, and sum_{odd n > 0} n^{-k1}.
std::pair<double, double> row_zero(long M, int k1, int k2) {
  double running = 0, lsh = 0;
  for (long n = 1; n <= M; ++n) {
    const double x = static_cast<double>(n);
    if (n % 2 == 0) {
      lsh += chi4(n - 1) * running / std::pow(x, k2);
    } else {
      running += 1 / std::pow(x, k1);
    }
  }
  const double a0 = running + right_tail(0, M, 1, 2, k1).real();
  const double g_right = (right_tail(0, M, 2, 4, k2) - right_tail(0, M, 0, 4, k2)).real();
  lsh += a0 * g_right;
  return {lsh, a0};
}

}  // namespace

VerifyReport verify_shuffle(int k1, int k2, int N) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("verify_shuffle needs k1, k2 >= 1");
  const int K = k1 + k2;
  const LSeries lhs = series_mul(eis_H(k1, N), eis_H(k2, N)).without_constant();
  LSeries rhs(N);
  for (int p = 1; p <= K - 1; ++p) {
    const Integer c = binomial(p - 1, k1 - 1) + binomial(p - 1, k2 - 1);
    if (c == 0) continue;
    rhs = series_add(rhs, scaled(eis_H2(K - p, p, N), Rational(c)));
  }
  return compare_series("shuffle", {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"N", std::to_string(N)}},
                        lhs, rhs);
}

VerifyReport verify_G_decomp(int k, int N) {
  require_even_k(k, "verify_G_decomp");
  const LSeries lhs = scaled(eis_G(k, N), Rational(k - 1));
  return compare_series("g-decomp", {{"k", std::to_string(k)}, {"N", std::to_string(N)}}, lhs, g_decomp_rhs(k, N));
}

VerifyReport verify_G_product(int k, int N) {
  require_even_k(k, "verify_G_product");
  const LSeries lhs = series_scale(eis_G(k, N), GaussianRational(2 * (k - 1)));
  LSeries rhs(N);
  rhs.set_exact_constant(LForm());
  for (int p = 1; p <= k - 1; p += 2) rhs = series_add(rhs, series_mul(eis_H(k - p, N), eis_H(p, N)));
  VerifyReport rep = compare_series("g-product", {{"k", std::to_string(k)}, {"N", std::to_string(N)}}, lhs, rhs);
  if (rep.pass && !(lhs.exact_constant() == rhs.exact_constant())) {
    rep.pass = false;
    rep.first_failure = Mismatch{0, lhs.exact_constant(), rhs.exact_constant()};
    rep.checked_through = -1;
  }
  return rep;
}

VerifyReport verify_im_vanishing(int k, int N) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("verify_im_vanishing needs odd k >= 3");
  const LSeries comb = g_decomp_rhs(k, N);
  VerifyReport rep = compare_series("im-vanish", {{"k", std::to_string(k)}, {"N", std::to_string(N)}},
                                    series_imag(comb), LSeries(N));
  for (int n = 1; n <= N && !rep.witness; ++n)
    if (!comb[n].is_zero()) rep.witness = Witness{n, comb[n]};
  if (!rep.witness) {
    rep.pass = false;
    rep.note = "combination vanishes identically through q^N";
  }
  return rep;
}

VerifyReport verify_theta(int N) {
  LSeries lhs = series_scale(eis_H(1, N), GaussianRational(4) * GaussianRational::i());
  // theta = 1 + 2 sum q^{n^2}, squared by direct convolution
  std::vector<long> theta(static_cast<std::size_t>(N + 1), 0), sq(static_cast<std::size_t>(N + 1), 0);
  theta[0] = 1;
  for (long m = 1; m * m <= N; ++m) theta[static_cast<std::size_t>(m * m)] = 2;
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b) sq[static_cast<std::size_t>(a + b)] += theta[static_cast<std::size_t>(a)] * theta[static_cast<std::size_t>(b)];
  LSeries rhs(N);
  rhs.set_exact_constant(LForm(sq[0]));
  for (int n = 1; n <= N; ++n) rhs[n] = LForm(sq[static_cast<std::size_t>(n)]);
  VerifyReport rep = compare_series("theta", {{"N", std::to_string(N)}}, lhs, rhs);
  if (rep.pass && !(lhs.exact_constant() == rhs.exact_constant())) {
    rep.pass = false;
    rep.first_failure = Mismatch{0, lhs.exact_constant(), rhs.exact_constant()};
    rep.checked_through = -1;
  }
  return rep;
}

VerifyReport verify_c_independence(int k1, int k2, int N) {
  const LSeries s = eis_H2(k1, k2, N);
  LSeries c_part(N);
  for (int n = 1; n <= N; ++n) c_part[n] = LForm(LGen::zodd(1), s[n].coeff(LGen::zodd(1)));
  return compare_series("c-independence",
                        {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"N", std::to_string(N)}}, c_part,
                        LSeries(N));
}

std::complex<double> lattice_oracle(int k1, int k2, std::complex<double> tau, int M) {
  if (k1 < 2 || k2 < 3) throw std::invalid_argument("lattice sum needs k1 >= 2 and k2 >= 3");
  if (!(tau.imag() > 0)) throw std::invalid_argument("tau must lie in the upper half plane");
  if (M < 10) throw std::invalid_argument("cutoff M must be >= 10");
  const auto [lsh, a0] = row_zero(M, k1, k2);

  cplx total = lsh;
  cplx prefix_a = a0;  // sum_{0 <= m1 < m2} A(m1)
  int quiet = 0;
  for (int m = 1; m <= 400 && quiet < 2; ++m) {
    const RowSums r = row_sums(4.0 * static_cast<double>(m) * tau, M, k1, k2);
    const cplx contrib = r.total_g * prefix_a + r.diagonal;
    total += contrib;
    prefix_a += r.total_f;
    quiet = std::abs(contrib) < 1e-19 * std::abs(total) ? quiet + 1 : 0;
  }
  const int K = k1 + k2;
  static const cplx unit_inv[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return 4.0 * unit_inv[K % 4] * std::pow(2 * std::numbers::pi, -K) * total;
}

std::complex<double> evaluate_series(const LSeries& s, std::complex<double> tau) {
  const cplx q = std::exp(cplx(0, 2 * std::numbers::pi) * tau);
  cplx value = 0, qn = 1;
  for (int n = 1; n <= s.truncation(); ++n) {
    qn *= q;
    value += evaluate_lform(s[n]) * qn;
  }
  struct ConstantValue {
    cplx operator()(const ConstAbsent&) const { return 0; }
    cplx operator()(const ConstExact<LForm>& e) const { return evaluate_lform(e.value); }
    cplx operator()(const ConstOpaqueT& t) const { return ttilde_single(t.k).value; }
    cplx operator()(const ConstOpaqueT2& t) const { return ttilde_double(t.k1, t.k2).value; }
    cplx operator()(const ConstOpaqueProduct<LForm>& p) const {
      return evaluate_lform(p.left) * evaluate_lform(p.right);
    }
  };
  return value + std::visit(ConstantValue{}, s.constant());
}

LatticeComparison compare_lattice(int k1, int k2, std::complex<double> tau, int M, int N, double tol) {
  LatticeComparison c;
  c.lattice = lattice_oracle(k1, k2, tau, M);
  c.qexp = evaluate_series(eis_H2(k1, k2, N), tau);
  c.abs_diff = std::abs(c.lattice - c.qexp);
  c.rel_diff = c.abs_diff / std::max(std::abs(c.qexp), 1e-300);
  c.pass = c.abs_diff < tol;
  return c;
}

}  // namespace eis4
