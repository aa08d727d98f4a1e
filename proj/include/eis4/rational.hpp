#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace eis4 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in canonical form. Throws std::domain_error when q == 0.
Rational make_rational(const Integer& p, const Integer& q);
Rational make_rational(long p, long q);

/// "p/q" with q > 0, always including the denominator (e.g. "-180/1").
std::string to_string(const Rational& x);

/// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n
Rational pow2(long e);             // 2^e for any sign of e
Rational pow_int(const Rational& base, unsigned long e);

/// 2-adic valuation with an explicit +infinity for zero.
class Valuation {
public:
  static Valuation infinity() { return Valuation(0, true); }
  explicit Valuation(long v) : value_(v), infinite_(false) {}

  bool is_infinite() const { return infinite_; }
  long value() const;  // throws std::logic_error when infinite

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

private:
  Valuation(long v, bool inf) : value_(v), infinite_(inf) {}
  long value_;
  bool infinite_;
};

Valuation ord2(const Rational& x);
long ord2(const Integer& x);  // x != 0

}  // namespace eis4
