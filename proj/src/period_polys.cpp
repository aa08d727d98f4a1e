#include "eis4/period_polys.hpp"

#include "eis4/eisenstein.hpp"
#include "eis4/special_numbers.hpp"

#include <stdexcept>
#include <utility>

namespace eis4 {

HomogPoly::HomogPoly(int w) : w_(w), a_(static_cast<std::size_t>(w + 1), Rational(0)) {
  if (w < 0) throw std::invalid_argument("negative polynomial degree");
}

HomogPoly::HomogPoly(int w, std::vector<Rational> coeffs) : w_(w), a_(std::move(coeffs)) {
  if (w < 0 || a_.size() != static_cast<std::size_t>(w + 1))
    throw std::invalid_argument("coefficient count must be degree + 1");
}

HomogPoly HomogPoly::monomial(int w, int n, const Rational& c) {
  HomogPoly p(w);
  p.coeff(n) = c;
  return p;
}

bool HomogPoly::is_zero() const {
  for (const auto& c : a_)
    if (c != 0) return false;
  return true;
}

HomogPoly HomogPoly::even_part() const {
  HomogPoly p = *this;
  for (int n = 1; n <= w_; n += 2) p.a_[n] = 0;
  return p;
}

HomogPoly HomogPoly::odd_part() const {
  HomogPoly p = *this;
  for (int n = 0; n <= w_; n += 2) p.a_[n] = 0;
  return p;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  if (o.w_ != w_) throw std::invalid_argument("degree mismatch");
  for (int n = 0; n <= w_; ++n) a_[n] += o.a_[n];
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
  if (o.w_ != w_) throw std::invalid_argument("degree mismatch");
  for (int n = 0; n <= w_; ++n) a_[n] -= o.a_[n];
  return *this;
}

HomogPoly& HomogPoly::operator*=(const Rational& s) {
  for (auto& c : a_) c *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const HomogPoly& p) {
  bool first = true;
  for (int n = 0; n <= p.degree(); ++n) {
    if (p.coeff(n) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(p.coeff(n)) << ")X^" << n << "Y^" << p.degree() - n;
  }
  if (first) os << "0";
  return os;
}

GL2Mat operator*(const GL2Mat& x, const GL2Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool operator==(const GL2Mat& x, const GL2Mat& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool operator<(const GL2Mat& x, const GL2Mat& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.c != y.c) return x.c < y.c;
  return x.d < y.d;
}

namespace {

// Coefficients over X-degree of (uX + vY)^e, as a homogeneous polynomial of degree e.
std::vector<Rational> linear_power(const Rational& u, const Rational& v, int e) {
  std::vector<Rational> r(static_cast<std::size_t>(e + 1), Rational(0));
  for (int i = 0; i <= e; ++i) r[i] = Rational(binomial(e, i)) * pow_int(u, i) * pow_int(v, e - i);
  return r;
}

std::vector<Rational> convolve(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> r(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return r;
}

}  // namespace

HomogPoly act(const HomogPoly& p, const GL2Mat& g) {
  const int w = p.degree();
  HomogPoly out(w);
  for (int n = 0; n <= w; ++n) {
    if (p.coeff(n) == 0) continue;
    const auto term = convolve(linear_power(g.a, g.b, n), linear_power(g.c, g.d, w - n));
    for (int i = 0; i <= w; ++i) out.coeff(i) += p.coeff(n) * term[i];
  }
  return out;
}

GroupRingElem::GroupRingElem(const GL2Mat& g, const Rational& c) { add(g, c); }

void GroupRingElem::add(const GL2Mat& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y) {
  GroupRingElem r;
  for (const auto& [g, c] : x.terms_)
    for (const auto& [h, d] : y.terms_) r.add(g * h, c * d);
  return r;
}

HomogPoly act_ring(const HomogPoly& p, const GroupRingElem& e) {
  HomogPoly out(p.degree());
  for (const auto& [g, c] : e.terms()) out += act(p, g) * c;
  return out;
}

GroupRingElem delta_k(int k) {
  const GroupRingElem one = GroupRingElem::scalar(1);
  const GroupRingElem d(GL2Mat::delta());
  const GroupRingElem plus = (one + d) * make_rational(1, 2);
  const GroupRingElem minus = (one - d) * make_rational(1, 2);
  const GroupRingElem U(GL2Mat::U()), eps(GL2Mat::epsilon());
  const Rational sk = k % 2 == 0 ? 1 : -1;
  return eps * (plus - sk * (minus * U) - plus * U * eps);
}

GroupRingElem delta_tilde() {
  const GroupRingElem one = GroupRingElem::scalar(1);
  const GroupRingElem d(GL2Mat::delta());
  return (one + d) + (one - d) * GroupRingElem(GL2Mat::A()) * (one + GroupRingElem(GL2Mat::epsilon()));
}

RationalMatrix representation_matrix(const GroupRingElem& e, int w) {
  RationalMatrix m(static_cast<std::size_t>(w + 1), static_cast<std::size_t>(w + 1));
  for (int n = 0; n <= w; ++n) {
    const HomogPoly img = act_ring(HomogPoly::monomial(w, n), e);
    for (int i = 0; i <= w; ++i) m(i, n) = img.coeff(i);
  }
  return m;
}

RationalMatrix build_Mk(int k) {
  if (k < 2) throw std::invalid_argument("build_Mk needs k >= 2");
  if (k == 2) return {};
  RationalMatrix m(static_cast<std::size_t>(k - 2), static_cast<std::size_t>(k - 1));
  const bool even = k % 2 == 0;
  for (int j = 1; j <= k - 2; ++j)
    for (int r = 1; r <= k - 1; ++r) {
      const bool j_even = j % 2 == 0;
      // The first block sits on odd j for even k and on even j for odd k.
      const bool first = even ? !j_even : j_even;
      Integer v = first ? (j == k - r ? Integer(0) : binomial(k - j - 1, r - 1)) : binomial(k - j - 1, k - r - 1);
      if (r % 2) v = -v;
      m(j - 1, r - 1) = Rational(v);
    }
  return m;
}

int im_delta_dim(int k) {
  if (k < 3) throw std::invalid_argument("im_delta_dim needs k >= 3");
  return static_cast<int>(mat_rank(representation_matrix(delta_k(k), k - 2)));
}

bool mk_matches_representation(int k) {
  if (k < 3) throw std::invalid_argument("needs k >= 3");
  const int w = k - 2;
  const RationalMatrix rep = representation_matrix(delta_k(k), w).transpose();
  // rep(n, i): coefficient of X^i Y^{w-i} in the image of X^n Y^{w-n}. Row j of M_k pairs with
  // input X-degree n = j - 1; the omitted row is the top input n = w, which must vanish.
  for (int i = 0; i <= w; ++i)
    if (rep(w, i) != 0) return false;
  const RationalMatrix mk = build_Mk(k);
  for (int j = 1; j <= k - 2; ++j)
    for (int r = 1; r <= k - 1; ++r)
      if (rep(j - 1, r - 1) != mk(j - 1, r - 1)) return false;
  return true;
}

Rational c_coeff(int w, int m, int n) {
  if (m <= 0 || m >= w || n <= 0 || n >= w || n + 1 - m < 0)
    throw std::invalid_argument("c_coeff index out of range");
  const int e = n + 1 - m;
  return pow2(2 * (n - m)) * Rational(factorial(n) * factorial(w - m)) * (1 - pow2(-e)) * bernoulli(e) /
         Rational(factorial(e));
}

Rational a_coeff(int w, int m, int n) {
  const Rational sgn = n % 2 == 0 ? 1 : -1;
  return c_coeff(w, m, n) + sgn * c_coeff(w, m, w - n);
}

Rational r_period(int w, int n, int m) {
  if (n <= 0 || m <= 0 || m >= w || w - m <= n) throw std::invalid_argument("r_period needs w - m > n > 0");
  if ((m + n) % 2 == 0) throw std::invalid_argument("r_period needs m + n odd");
  const Rational a = m < n ? a_coeff(w, m, n) : a_coeff(w, n, m);
  return -pow2(2 * (w - m - n)) / Rational(factorial(w)) * a;
}

RationalMatrix build_Atilde(int w) {
  if (w < 6 || w % 2 != 0) throw std::invalid_argument("build_Atilde needs even w >= 6");
  const int d = w / 4;
  RationalMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) m(i - 1, j - 1) = i > j ? a_coeff(w, 2 * j, 2 * i - 1) : a_coeff(w, 2 * i - 1, 2 * j);
  return m;
}

long predicted_det_ord2(int w) {
  long s = 0;
  const int d = w / 4;
  for (int i = 1; i <= d; ++i) s += ord2(Integer(factorial(2 * i) * factorial(w - 2 * i)));
  return s - 2 * d + (w % 4 == 0 ? 1 : 0);
}

DetOrd2Report check_det_ord2(int w) {
  DetOrd2Report rep;
  rep.w = w;
  rep.det = mat_det(build_Atilde(w));
  rep.ord2 = ord2(rep.det);
  rep.predicted = predicted_det_ord2(w);
  rep.pass = rep.det != 0 && !rep.ord2.is_infinite() && rep.ord2.value() == rep.predicted;
  return rep;
}

int delta_tilde_kernel_dim(int k) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("delta_tilde_kernel_dim needs even k >= 6");
  return static_cast<int>(mat_kernel(representation_matrix(delta_tilde(), k - 2)).size());
}

int im_space_rank_bruteforce(int k, int N) {
  if (k < 3) throw std::invalid_argument("im_space_rank_bruteforce needs k >= 3");
  std::vector<std::map<std::pair<int, LGen>, Rational>> rows;
  std::map<std::pair<int, LGen>, std::size_t> columns;
  for (int r = 1; r <= k - 1; ++r) {
    const LSeries im = series_imag(eis_H2(r, k - r, N));
    std::map<std::pair<int, LGen>, Rational> row;
    for (int n = 1; n <= N; ++n)
      for (const auto& [g, c] : im[n].terms()) {
        row[{n, g}] = c.re();
        columns.try_emplace({n, g}, columns.size());
      }
    rows.push_back(std::move(row));
  }
  RationalMatrix m(rows.size(), columns.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, v] : rows[i]) m(i, columns.at(key)) = v;
  return static_cast<int>(mat_rank(m));
}

}  // namespace eis4
