#pragma once

#include "eis4/gaussian.hpp"
#include "eis4/lform.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eis4 {

struct ConstAbsent {
  friend bool operator==(const ConstAbsent&, const ConstAbsent&) = default;
};
template <class C>
struct ConstExact {
  C value;
  friend bool operator==(const ConstExact&, const ConstExact&) = default;
};
/// Constant term T~(k) kept symbolic.
struct ConstOpaqueT {
  int k = 0;
  friend bool operator==(const ConstOpaqueT&, const ConstOpaqueT&) = default;
};
/// Constant term T~(k1, k2) kept symbolic.
struct ConstOpaqueT2 {
  int k1 = 0;
  int k2 = 0;
  friend bool operator==(const ConstOpaqueT2&, const ConstOpaqueT2&) = default;
};
/// Product of two exact constants that has no representation in the coefficient
/// ring, e.g. Leven(2) * Leven(4). Arises only as the constant of a product.
template <class C>
struct ConstOpaqueProduct {
  C left;
  C right;
  friend bool operator==(const ConstOpaqueProduct&, const ConstOpaqueProduct&) = default;
};

template <class C>
using SeriesConstant = std::variant<ConstAbsent, ConstExact<C>, ConstOpaqueT, ConstOpaqueT2, ConstOpaqueProduct<C>>;

/// Truncation used when none is given: EIS4_TERMS if set to a positive integer, else 40.
int default_truncation();

/// Truncated power series sum_{n=1}^{N} a_n q^n plus a separately tracked constant term.
template <class C>
class QSeries {
public:
  explicit QSeries(int truncation) : coeffs_(check_truncation(truncation)) {}

  int truncation() const { return static_cast<int>(coeffs_.size()); }

  /// Coefficient of q^n for 1 <= n <= N.
  const C& operator[](int n) const { return coeffs_.at(index(n)); }
  C& operator[](int n) { return coeffs_.at(index(n)); }

  const SeriesConstant<C>& constant() const { return constant_; }
  void set_constant(SeriesConstant<C> c) { constant_ = std::move(c); }
  void set_exact_constant(C c) { constant_ = ConstExact<C>{std::move(c)}; }
  bool has_exact_constant() const { return std::holds_alternative<ConstExact<C>>(constant_); }
  const C& exact_constant() const {
    if (!has_exact_constant()) throw std::domain_error("series constant is not exact");
    return std::get<ConstExact<C>>(constant_).value;
  }

  QSeries without_constant() const {
    QSeries r = *this;
    r.constant_ = ConstAbsent{};
    return r;
  }

  bool nonconstant_is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == C())) return false;
    return true;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

private:
  static std::size_t check_truncation(int n) {
    if (n < 1) throw std::invalid_argument("truncation must be >= 1");
    return static_cast<std::size_t>(n);
  }
  std::size_t index(int n) const {
    if (n < 1 || n > truncation()) throw std::out_of_range("q-index outside 1..N");
    return static_cast<std::size_t>(n - 1);
  }

  std::vector<C> coeffs_;
  SeriesConstant<C> constant_ = ConstAbsent{};
};

using LSeries = QSeries<LForm>;
using GSeries = QSeries<GaussianRational>;

namespace detail {

inline void require_same_truncation(int a, int b) {
  if (a != b) throw std::invalid_argument("truncation mismatch");
}

template <class C>
SeriesConstant<C> add_constants(const SeriesConstant<C>& a, const SeriesConstant<C>& b, bool negate_b) {
  if (std::holds_alternative<ConstAbsent>(b)) return a;
  if (std::holds_alternative<ConstAbsent>(a)) {
    if (!negate_b) return b;
    if (auto* e = std::get_if<ConstExact<C>>(&b)) return ConstExact<C>{-e->value};
    throw std::domain_error("cannot negate an opaque constant");
  }
  auto* ea = std::get_if<ConstExact<C>>(&a);
  auto* eb = std::get_if<ConstExact<C>>(&b);
  if (!ea || !eb) throw std::domain_error("cannot add opaque constants");
  return ConstExact<C>{negate_b ? C(ea->value - eb->value) : C(ea->value + eb->value)};
}

inline GaussianRational imag_of(const GaussianRational& z) { return GaussianRational(z.im()); }
inline LForm imag_of(const LForm& f) { return lform_imag(f); }

}  // namespace detail

template <class C>
QSeries<C> series_add(const QSeries<C>& a, const QSeries<C>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  QSeries<C> r(a.truncation());
  r.set_constant(detail::add_constants<C>(a.constant(), b.constant(), false));
  for (int n = 1; n <= a.truncation(); ++n) r[n] = a[n] + b[n];
  return r;
}

template <class C>
QSeries<C> series_sub(const QSeries<C>& a, const QSeries<C>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  QSeries<C> r(a.truncation());
  r.set_constant(detail::add_constants<C>(a.constant(), b.constant(), true));
  for (int n = 1; n <= a.truncation(); ++n) r[n] = a[n] - b[n];
  return r;
}

/// Multiplies every coefficient by s. Opaque constants survive only s == 1.
template <class C>
QSeries<C> series_scale(const QSeries<C>& a, const GaussianRational& s) {
  QSeries<C> r(a.truncation());
  if (auto* e = std::get_if<ConstExact<C>>(&a.constant())) {
    r.set_exact_constant(e->value * s);
  } else if (!std::holds_alternative<ConstAbsent>(a.constant())) {
    if (!(s == GaussianRational(1))) throw std::domain_error("cannot scale an opaque constant");
    r.set_constant(a.constant());
  }
  for (int n = 1; n <= a.truncation(); ++n) r[n] = a[n] * s;
  return r;
}

/// Cauchy product truncated at N, including the constant-times-coefficient cross terms.
/// Both constants must be exact.
template <class C>
QSeries<C> series_mul(const QSeries<C>& a, const QSeries<C>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  if (!a.has_exact_constant() || !b.has_exact_constant())
    throw std::domain_error("series product needs exact constants in both factors");
  const C& a0 = a.exact_constant();
  const C& b0 = b.exact_constant();
  const int N = a.truncation();
  QSeries<C> r(N);
  try {
    r.set_exact_constant(a0 * b0);
  } catch (const std::domain_error&) {
    r.set_constant(ConstOpaqueProduct<C>{a0, b0});
  }
  for (int n = 1; n <= N; ++n) {
    C s = a0 * b[n] + a[n] * b0;
    for (int i = 1; i < n; ++i) {
      if (a[i] == C() || b[n - i] == C()) continue;
      s += a[i] * b[n - i];
    }
    r[n] = std::move(s);
  }
  return r;
}

/// Imaginary part of every non-constant coefficient; the constant is dropped.
template <class C>
QSeries<C> series_imag(const QSeries<C>& a) {
  QSeries<C> r(a.truncation());
  for (int n = 1; n <= a.truncation(); ++n) r[n] = detail::imag_of(a[n]);
  return r;
}

/// Embeds a Q(i)-series into the L-form ring (scalars times One).
LSeries lift(const GSeries& a);

/// First q-index in 1..N where the non-constant coefficients differ.
template <class C>
std::optional<int> first_mismatch(const QSeries<C>& a, const QSeries<C>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  for (int n = 1; n <= a.truncation(); ++n)
    if (!(a[n] == b[n])) return n;
  return std::nullopt;
}

/// Short tag for the constant descriptor: "absent", "exact", "opaque_t", "opaque_t2", "opaque_product".
template <class C>
std::string constant_kind(const SeriesConstant<C>& c) {
  static const char* names[] = {"absent", "exact", "opaque_t", "opaque_t2", "opaque_product"};
  return names[c.index()];
}

}  // namespace eis4
