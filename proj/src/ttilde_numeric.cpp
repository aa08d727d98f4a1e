#include "eis4/ttilde_numeric.hpp"

#include "eis4/relations.hpp"
#include "eis4/special_numbers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace eis4 {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kCvzTerms = 45;
constexpr int kEulerHead = 30;
constexpr int kEulerRounds = 60;

// (2 pi i)^{-k}
std::complex<double> two_pi_i_inv_pow(int k) {
  static const std::complex<double> unit_inv[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return unit_inv[k % 4] * std::pow(kTwoPi, -k);
}

double ipow_inv(double x, int k) { return std::pow(x, -k); }

// Inner alternating sum G(x) = sum_t (-1)^t (x + 2t + 1)^{-k2}.
double inner_cvz(double x, int k2) {
  return alternating_sum_cvz([x, k2](int t) { return ipow_inv(x + 2 * t + 1, k2); }, kCvzTerms);
}

double inner_euler(double x, int k2) {
  return alternating_sum_euler([x, k2](int t) { return ipow_inv(x + 2 * t + 1, k2); }, kEulerHead, kEulerRounds);
}

}  // namespace

std::string to_string(NumericMethod m) {
  return m == NumericMethod::closed_form ? "closed_form" : "accelerated_sum";
}

double alternating_sum_cvz(const std::function<double(int)>& a, int n) {
  double d = std::pow(3 + std::sqrt(8.0), n);
  d = (d + 1 / d) / 2;
  double b = -1, c = -d, s = 0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
  }
  return s / d;
}

double alternating_sum_euler(const std::function<double(int)>& a, int head, int rounds) {
  std::vector<double> partial;
  partial.reserve(static_cast<std::size_t>(rounds + 1));
  double s = 0;
  for (int k = 0; k < head; ++k) s += (k % 2 ? -1 : 1) * a(k);
  for (int k = head; k <= head + rounds; ++k) {
    s += (k % 2 ? -1 : 1) * a(k);
    partial.push_back(s);
  }
  for (int r = 0; r < rounds; ++r)
    for (std::size_t i = 0; i + 1 < partial.size() - static_cast<std::size_t>(r); ++i)
      partial[i] = (partial[i] + partial[i + 1]) / 2;
  return partial[0];
}

double l_value_chi4(int m) {
  if (m < 1) throw std::invalid_argument("l_value_chi4 needs m >= 1");
  return alternating_sum_cvz([m](int s) { return ipow_inv(2 * s + 1, m); }, kCvzTerms);
}

double l_value_chi0(int m) {
  if (m < 2) throw std::invalid_argument("l_value_chi0 needs m >= 2");
  // (1 - 2^{-m}) zeta(m), with zeta from the alternating eta series
  const double eta = alternating_sum_cvz([m](int n) { return ipow_inv(n + 1, m); }, kCvzTerms);
  return (1 - std::pow(2.0, -m)) * eta / (1 - std::pow(2.0, 1 - m));
}

double free_constant_value() { return 0.37; }

double generator_value(const LGen& g) {
  switch (g.kind) {
    case LGen::Kind::One: return 1;
    case LGen::Kind::Zodd:
      if (g.m == 1) return free_constant_value();
      return std::pow(kTwoPi, -g.m) * l_value_chi0(g.m);
    case LGen::Kind::Leven: return (g.m % 4 == 0 ? 1 : -1) * std::pow(kTwoPi, -g.m) * l_value_chi4(g.m);
  }
  return 0;
}

std::complex<double> evaluate_lform(const LForm& f) {
  std::complex<double> s = 0;
  for (const auto& [g, c] : f.terms()) s += c.to_complex() * generator_value(g);
  return s;
}

NumericTValue ttilde_single(int k) {
  if (k < 1) throw std::invalid_argument("ttilde_single needs k >= 1");
  if (k % 2 == 1) return {(GaussianRational(2) * ell4_odd(k)).to_complex(), 0, NumericMethod::closed_form};
  const double a = l_value_chi4(k);
  const double b = alternating_sum_euler([k](int s) { return ipow_inv(2 * s + 1, k); }, kEulerHead, kEulerRounds);
  const auto pre = 2.0 * two_pi_i_inv_pow(k);
  const double err = std::abs(pre) * std::max(std::abs(a - b), 4e-16 * std::abs(a));
  return {pre * a, err, NumericMethod::accelerated_sum};
}

NumericTValue ttilde_double(int k1, int k2, double tol) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("ttilde_double needs k1, k2 >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  // L_sh = sum_{s>=0} (-1)^s G(2s+1) / (2s+1)^{k1}; both layers are completely monotone.
  const double a = alternating_sum_cvz(
      [k1, k2](int s) { return inner_cvz(2 * s + 1, k2) * ipow_inv(2 * s + 1, k1); }, kCvzTerms);
  const double b = alternating_sum_euler(
      [k1, k2](int s) { return inner_euler(2 * s + 1, k2) * ipow_inv(2 * s + 1, k1); }, kEulerHead, kEulerRounds);
  const auto pre = 4.0 * two_pi_i_inv_pow(k1 + k2);
  const double err = std::abs(pre) * std::max(std::abs(a - b), 4e-16 * std::abs(a));
  if (err > tol) throw std::runtime_error("T~ strategies disagree beyond tolerance");
  return {pre * a, err, NumericMethod::accelerated_sum};
}

RelationNumericReport verify_relation_numeric(int k, int j, double tol, bool paper_literal) {
  const RelationVector v =
      atilde_vector(k, j, paper_literal ? DeltaConvention::paper_literal : DeltaConvention::corrected);
  RelationNumericReport rep;
  rep.k = k;
  rep.j = j;
  rep.paper_literal = paper_literal;
  rep.tol = tol;
  for (int p = 1; p <= k - 1; ++p) {
    const NumericTValue t = ttilde_double(p, k - p, tol);
    const double c = v.coeffs[p - 1].get_d();
    rep.residual += c * t.value;
    rep.scale += std::abs(c * t.value);
    rep.budget += std::abs(c) * t.est_error;
  }
  // Rounding in the final sum itself.
  rep.budget += 1e-15 * rep.scale;
  rep.pass = std::abs(rep.residual) < tol && rep.budget < tol;
  return rep;
}

}  // namespace eis4
