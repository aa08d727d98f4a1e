#pragma once

#include "eis4/gaussian.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace eis4 {

/// Formal generator of the L-value ring. Every generator stands for a real
/// constant:
///   One       1
///   Zodd(m)   (2 pi)^{-m} L(chi_0, m), m odd >= 3; Zodd(1) is the free constant c
///   Leven(m)  (2 pi i)^{-m} L(chi_4, m), m even >= 2
/// so (2 pi i)^{-m} L(chi_0, m) = i^{-m} Zodd(m) for odd m.
struct LGen {
  enum class Kind { One, Zodd, Leven };
  Kind kind = Kind::One;
  int m = 0;

  static LGen one() { return {Kind::One, 0}; }
  static LGen zodd(int m);   // odd m >= 1
  static LGen leven(int m);  // even m >= 2

  /// "1", "Z3", "L2", ...
  std::string name() const;
  static LGen parse(std::string_view name);

  friend auto operator<=>(const LGen&, const LGen&) = default;
};

/// Finite Q(i)-linear combination of generators. Zero coefficients are never stored.
class LForm {
public:
  using Terms = std::map<LGen, GaussianRational>;

  LForm() = default;
  LForm(const GaussianRational& c);  // NOLINT: c * One
  LForm(long c) : LForm(GaussianRational(c)) {}  // NOLINT
  LForm(LGen g, const GaussianRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the support is contained in {One}.
  bool is_scalar() const;
  GaussianRational coeff(const LGen& g) const;

  LForm operator-() const;
  LForm& operator+=(const LForm& o);
  LForm& operator-=(const LForm& o);
  LForm& operator*=(const GaussianRational& c);

  friend LForm operator+(LForm a, const LForm& b) { return a += b; }
  friend LForm operator-(LForm a, const LForm& b) { return a -= b; }
  friend LForm operator*(LForm a, const GaussianRational& c) { return a *= c; }
  friend LForm operator*(const GaussianRational& c, LForm a) { return a *= c; }
  /// Defined only when one factor is scalar; throws std::domain_error otherwise.
  friend LForm operator*(const LForm& a, const LForm& b);
  friend bool operator==(const LForm&, const LForm&) = default;

private:
  void add_term(const LGen& g, const GaussianRational& c);
  Terms terms_;
};

/// Coordinate-wise imaginary part: a + bi -> b on every generator.
LForm lform_imag(const LForm& f);
/// Coordinate-wise real part.
LForm lform_real(const LForm& f);

std::ostream& operator<<(std::ostream& os, const LForm& f);

}  // namespace eis4
