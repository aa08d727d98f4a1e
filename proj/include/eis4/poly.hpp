#pragma once

#include "eis4/rational.hpp"

#include <cstddef>
#include <ostream>
#include <vector>

namespace eis4 {

/// Dense univariate polynomial over Q; coeffs()[d] multiplies X^d. Trailing zeros are trimmed.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Rational(0); }
  Rational eval(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace eis4
