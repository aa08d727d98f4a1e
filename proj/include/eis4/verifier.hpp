#pragma once

#include "eis4/qseries.hpp"
#include "eis4/report.hpp"

#include <complex>

namespace eis4 {

/// H~_{k1} H~_{k2} against the binomial combination of H~_{k1+k2-p, p}, on q^1..q^N.
VerifyReport verify_shuffle(int k1, int k2, int N);
/// (k-1) G~_k against sum_p 2^{k-2-p} H~_{p,k-p} + H~_{k-1,1}/2, on q^1..q^N. Even k >= 4.
VerifyReport verify_G_decomp(int k, int N);
/// 2(k-1) G~_k against sum over odd p of H~_{k-p} H~_p, constant included. Even k >= 4.
VerifyReport verify_G_product(int k, int N);
/// The imaginary part of sum_r 2^{r-2} H~_{k-r,r} + H~_{k-1,1}/2 vanishes while the
/// combination itself does not. Odd k >= 3. The witness is its first nonzero coefficient.
VerifyReport verify_im_vanishing(int k, int N);
/// 4i H~_1 against theta^2, constant included.
VerifyReport verify_theta(int N);
/// No coefficient of H~_{k1,k2} involves the free constant Zodd(1).
VerifyReport verify_c_independence(int k1, int k2, int N);

/// Direct evaluation of the ordered double lattice sum defining H~_{k1,k2}(tau), normalized
/// by 4 (2 pi i)^{-(k1+k2)}. Inner sums run over |n| <= M with Euler-Maclaurin tail
/// corrections; the m-sums stop once terms fall below double precision.
/// Requires k1 >= 2, k2 >= 3 and Im(tau) > 0; throws std::invalid_argument otherwise.
std::complex<double> lattice_oracle(int k1, int k2, std::complex<double> tau, int M);

/// Sums an L-form series at tau with floating generator values and the numeric constant.
std::complex<double> evaluate_series(const LSeries& s, std::complex<double> tau);

struct LatticeComparison {
  std::complex<double> lattice;
  std::complex<double> qexp;
  double abs_diff = 0;
  double rel_diff = 0;
  bool pass = false;
};

/// Compares the lattice oracle with the q-expansion of H~_{k1,k2} at tau.
LatticeComparison compare_lattice(int k1, int k2, std::complex<double> tau, int M, int N, double tol);

}  // namespace eis4
