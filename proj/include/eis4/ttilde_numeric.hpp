#pragma once

#include "eis4/lform.hpp"

#include <complex>
#include <functional>
#include <string>

namespace eis4 {

enum class NumericMethod { closed_form, accelerated_sum };

std::string to_string(NumericMethod m);

struct NumericTValue {
  std::complex<double> value;
  double est_error = 0;  // 0 for closed forms
  NumericMethod method = NumericMethod::closed_form;
};

/// sum_{k>=0} (-1)^k a(k) for a completely monotone a, by the Cohen-Villegas-Zagier
/// weights with n terms.
double alternating_sum_cvz(const std::function<double(int)>& a, int n);
/// Same sum by summing `head` terms directly and then averaging the next `rounds`
/// partial sums repeatedly (Euler transform of the tail).
double alternating_sum_euler(const std::function<double(int)>& a, int head, int rounds);

double l_value_chi4(int m);  // m >= 1
double l_value_chi0(int m);  // m >= 2

/// Real value substituted for a generator. Zodd(1) is the free constant and takes the
/// arbitrary value free_constant_value(); every identity in scope is independent of it.
double generator_value(const LGen& g);
double free_constant_value();
std::complex<double> evaluate_lform(const LForm& f);

/// T~(k) = 2 (2 pi i)^{-k} L(chi4, k): exact for odd k, accelerated sum for even k.
NumericTValue ttilde_single(int k);
/// T~(k1,k2) = 4 (2 pi i)^{-(k1+k2)} L_sh(chi4, k1, k2). Two independent accelerations are
/// compared; throws std::runtime_error if they differ by more than tol.
NumericTValue ttilde_double(int k1, int k2, double tol = 1e-10);

struct RelationNumericReport {
  int k = 0;
  int j = 0;
  bool paper_literal = false;
  std::complex<double> residual;
  double scale = 0;   // sum_p |a_p T~(p, k-p)|, the size of the cancelling terms
  double budget = 0;  // propagated numeric error of the T~ values
  double tol = 0;
  bool pass = false;
};

/// Residual of sum_p a~_{k,j,p} T~(p, k-p). Passes when both |residual| and the error
/// budget are below tol.
RelationNumericReport verify_relation_numeric(int k, int j, double tol, bool paper_literal = false);

}  // namespace eis4
