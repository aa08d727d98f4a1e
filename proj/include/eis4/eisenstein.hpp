#pragma once

#include "eis4/qseries.hpp"
#include "eis4/report.hpp"

namespace eis4 {

/// One of the divisor-sum blocks h, h~, g~ of weight m. Its reduced q^n
/// coefficient is an integer divisor sum.
struct BlockSpec {
  enum class Kind { h, h_tilde, g_tilde };
  Kind kind = Kind::h;
  int m = 1;
};

/// h -> sigma_chi0(m-1, n), h~ -> sigma_chi4(m-1, n), g~ -> sigma_chi4_shift(m-1, n).
/// Throws std::invalid_argument for m < 1, or m < 2 with g~.
Integer block_coefficient(const BlockSpec& b, long n);

/// (2 pi i)^{-m} L(chi0, m) as a form: a rational for even m, i^{-m} Zodd(m) for odd m.
LForm ell0(int m);
/// (2 pi i)^{-m} L(chi4, m) as a form: a Gaussian rational for odd m, Leven(m) for even m.
LForm ell4(int m);

/// Normalized single series H~_k, k >= 1.
LSeries eis_H(int k, int N);
/// Normalized G~_k for even k >= 4.
LSeries eis_G(int k, int N);
/// Normalized double series H~_{k1,k2}, k1, k2 >= 1. The constant is OpaqueT2(k1, k2).
LSeries eis_H2(int k1, int k2, int N);

/// Reduced coefficients of the double sum over 0 < m1 < m2 of phi~_{k1}(m1 tau) psi_{k2}(m2 tau):
/// sum of chi4(n1+1) n1^{k1-1} chi0(n2) n2^{k2-1} over n1 m1 + n2 m2 = n, n1, n2 >= 1,
/// plus 1/2 sum_{m2 n2 = n} (m2 - 1) chi0(n2) n2^{k2-1} when k1 = 1. The constant is exactly 0.
GSeries omega_double_sum(int k1, int k2, int N);

/// Compares the diagonal sum over m of psi~_{k1}(m tau) psi~_{k2}(m tau) with its closed form in
/// g~ blocks, both normalized by (-2 pi i)^{k1+k2}, on q^1..q^N.
VerifyReport verify_diagonal_product(int k1, int k2, int N);

}  // namespace eis4
