#pragma once

#include "eis4/gaussian.hpp"
#include "eis4/poly.hpp"
#include "eis4/rational.hpp"

namespace eis4 {

/// The two Dirichlet characters modulo 4.
enum class Character { chi0, chi4 };

int chi(Character c, long n);
inline int chi0(long n) { return chi(Character::chi0, n); }
inline int chi4(long n) { return chi(Character::chi4, n); }

/// B_n with B_1 = +1/2, i.e. from t e^t / (e^t - 1).
Rational bernoulli(long n);
/// E_n from 2 / (e^t + e^{-t}).
Integer euler_number(long n);
/// E_k(x) = sum_n binom(k,n) (E_n / 2^n) (x - 1/2)^{k-n}.
Rational euler_poly(long k, const Rational& x);

/// sum_{w=1}^{n-1} chi0(w) w^{k-1} through the closed Bernoulli form.
/// Throws std::invalid_argument unless n is even and >= 2 and k >= 1.
Rational power_sum_chi0(long n, long k);

/// (2 pi i)^{-k} L(chi0, k) for even k >= 2. Throws std::invalid_argument otherwise.
Rational ell0_even(long k);
/// (2 pi i)^{-k} L(chi4, k) for odd k >= 1. Throws std::invalid_argument otherwise.
GaussianRational ell4_odd(long k);

/// sum_{d | n} chi4(d) d^j
Integer sigma_chi4(long j, long n);
/// sum_{d | n, d odd} d^j
Integer sigma_chi0(long j, long n);
/// sum_{d | n} chi4(d + 1) d^j
Integer sigma_chi4_shift(long j, long n);

/// B_n^0(X) = sum over even j <= n of binom(n,j) B_j X^{n-j}.
UniPoly b0_poly(long n);

}  // namespace eis4
