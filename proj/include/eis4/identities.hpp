#pragma once

#include "eis4/rational.hpp"

#include <vector>

namespace eis4 {

// Both sides of the finite identities the series proofs rest on, exposed so
// they can be checked exhaustively over a parameter range.

/// B_k / k * (1 - 2^{-k})
Rational bernoulli_euler_lhs(long k);
/// 4^{-k} sum_{r=1}^{k-1} binom(k-2, r-1) E_{k-r-1} E_{r-1}
Rational bernoulli_euler_rhs(long k);

/// sum_{w=1}^{n-1} chi4(w+1) (w/2)^k for odd n
Rational euler_shift_sum_lhs(long n, long k);
/// chi4(n)/2 E_k((n+1)/2) - (E_k(1) - E_k(0)) / 4
Rational euler_shift_sum_rhs(long n, long k);

/// sum_{nu=0}^{mu} (-1)^nu binom(a+b-nu, a) binom(mu, nu) == binom(a+b-mu, b)
bool binomial_identity_holds(long a, long b, long mu);

/// Sequences are indexed directly: a[i] is a_i, so both need size >= k1 + k2.
bool sequence_identity_first_holds(long k1, long k2, const std::vector<Rational>& a,
                                   const std::vector<Rational>& b);
bool sequence_identity_second_holds(long k1, long k2, const std::vector<Rational>& a,
                                    const std::vector<Rational>& b);

}  // namespace eis4
