#include "eis4/rational.hpp"

#include <stdexcept>

namespace eis4 {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational make_rational(long p, long q) { return make_rational(Integer(p), Integer(q)); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational pow_int(const Rational& base, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(n, d);  // already coprime
}

long Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation of zero is infinite");
  return value_;
}

long ord2(const Integer& x) {
  if (x == 0) throw std::domain_error("ord2 of zero integer");
  return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

Valuation ord2(const Rational& x) {
  if (x == 0) return Valuation::infinity();
  return Valuation(ord2(x.get_num()) - ord2(x.get_den()));
}

}  // namespace eis4
