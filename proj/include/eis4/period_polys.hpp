#pragma once

#include "eis4/matrix.hpp"
#include "eis4/rational.hpp"

#include <map>
#include <ostream>
#include <vector>

namespace eis4 {

/// Homogeneous polynomial of degree w in X, Y; coeffs()[n] multiplies X^n Y^{w-n}.
class HomogPoly {
public:
  explicit HomogPoly(int w);
  HomogPoly(int w, std::vector<Rational> coeffs);
  static HomogPoly monomial(int w, int n, const Rational& c = 1);

  int degree() const { return w_; }
  const std::vector<Rational>& coeffs() const { return a_; }
  const Rational& coeff(int n) const { return a_.at(static_cast<std::size_t>(n)); }
  Rational& coeff(int n) { return a_.at(static_cast<std::size_t>(n)); }
  bool is_zero() const;

  /// Part whose X-degree is even (resp. odd).
  HomogPoly even_part() const;
  HomogPoly odd_part() const;

  HomogPoly& operator+=(const HomogPoly& o);
  HomogPoly& operator-=(const HomogPoly& o);
  HomogPoly& operator*=(const Rational& s);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(HomogPoly a, const Rational& s) { return a *= s; }
  friend HomogPoly operator*(const Rational& s, HomogPoly a) { return a *= s; }
  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

private:
  int w_;
  std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, const HomogPoly& p);

/// 2x2 matrix [[a, b], [c, d]] over Q.
struct GL2Mat {
  Rational a = 1, b = 0, c = 0, d = 1;

  static GL2Mat identity() { return {}; }
  static GL2Mat delta() { return {-1, 0, 0, 1}; }
  static GL2Mat epsilon() { return {0, 1, 1, 0}; }
  static GL2Mat U() { return {1, -1, 1, 0}; }
  static GL2Mat T() { return {1, 1, 0, 1}; }
  static GL2Mat J() { return {-1, 0, 0, -1}; }
  static GL2Mat A() { return {1, 0, 0, 4}; }

  friend GL2Mat operator*(const GL2Mat& x, const GL2Mat& y);
  friend bool operator==(const GL2Mat& x, const GL2Mat& y);
  friend bool operator<(const GL2Mat& x, const GL2Mat& y);
};

/// (P|g)(X, Y) = P(aX + bY, cX + dY). This is a right action: (P|g)|h = P|(gh).
HomogPoly act(const HomogPoly& p, const GL2Mat& g);

/// Finite rational combination of matrices.
class GroupRingElem {
public:
  GroupRingElem() = default;
  GroupRingElem(const GL2Mat& g, const Rational& c = 1);  // NOLINT
  static GroupRingElem scalar(const Rational& c) { return GroupRingElem(GL2Mat::identity(), c); }

  const std::map<GL2Mat, Rational>& terms() const { return terms_; }

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(const Rational& s);
  friend GroupRingElem operator+(GroupRingElem x, const GroupRingElem& y) { return x += y; }
  friend GroupRingElem operator-(GroupRingElem x, const GroupRingElem& y) { return x -= y; }
  friend GroupRingElem operator*(GroupRingElem x, const Rational& s) { return x *= s; }
  friend GroupRingElem operator*(const Rational& s, GroupRingElem x) { return x *= s; }
  friend GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y);

private:
  void add(const GL2Mat& g, const Rational& c);
  std::map<GL2Mat, Rational> terms_;
};

HomogPoly act_ring(const HomogPoly& p, const GroupRingElem& e);

/// eps ((1+delta)/2 - (-1)^k (1-delta)/2 U - (1+delta)/2 U eps)
GroupRingElem delta_k(int k);
/// (1+delta) + (1-delta) A (1+eps)
GroupRingElem delta_tilde();

/// Matrix of P -> P|e on the monomial basis of degree w: column n holds the image of X^n Y^{w-n}.
RationalMatrix representation_matrix(const GroupRingElem& e, int w);

/// The (k-2) x (k-1) integer matrix M_k, rows j = 1..k-2, columns r = 1..k-1. For k = 2 the
/// matrix is empty. Throws std::invalid_argument for k < 2.
RationalMatrix build_Mk(int k);
/// rank of the representation matrix of delta_k on V_k, k >= 3.
int im_delta_dim(int k);
/// True when the transposed representation matrix of delta_k, with its all-zero row for the
/// top X-degree input dropped, equals build_Mk(k).
bool mk_matches_representation(int k);

Rational c_coeff(int w, int m, int n);
Rational a_coeff(int w, int m, int n);
/// r_m(R_{w,n}) through the closed form. Requires 0 < n, 0 < m < w, w - m > n and m + n odd.
Rational r_period(int w, int n, int m);

/// The [w/4] x [w/4] matrix A~_w for even w >= 6.
RationalMatrix build_Atilde(int w);

struct DetOrd2Report {
  int w = 0;
  Rational det;
  Valuation ord2{0};
  long predicted = 0;
  bool pass = false;
};

/// sum_{i <= [w/4]} ord2((2i)! (w-2i)!) - 2 [w/4] + [w = 0 mod 4]
long predicted_det_ord2(int w);
DetOrd2Report check_det_ord2(int w);

/// dim Ker of delta~ on V_k, even k >= 6.
int delta_tilde_kernel_dim(int k);

/// Rank of the rows Im(H~_{r,k-r}), r = 1..k-1, with every (q-power, generator) pair as a column.
int im_space_rank_bruteforce(int k, int N);

}  // namespace eis4
