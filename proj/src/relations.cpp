#include "eis4/relations.hpp"

#include "eis4/matrix.hpp"
#include "eis4/special_numbers.hpp"

#include <stdexcept>

namespace eis4 {

namespace {

void require_lambda_range(int k, int r) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("lambda needs even k >= 4");
  if (r % 2 == 0 || r < 3 || r > k - 3) throw std::invalid_argument("lambda needs odd r with 3 <= r <= k-3");
}

void require_atilde_range(int k, int j) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("a~ needs even k >= 6");
  if (j < 1 || j > (k - 2) / 4) throw std::invalid_argument("a~ needs 1 <= j <= [(k-2)/4]");
}

void require_conj_range(int N, int k, int j) {
  if (N != 2 && N != 4) throw std::invalid_argument("level must be 2 or 4");
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("conjecture polynomials need even k >= 4");
  if (j < 1 || j > (k - 2) / 2) throw std::invalid_argument("conjecture polynomials need 1 <= j <= (k-2)/2");
}

Rational binom_q(long n, long k) { return Rational(binomial(n, k)); }

}  // namespace

Rational lambda(int k, int r) {
  require_lambda_range(k, r);
  Rational num(factorial(static_cast<unsigned long>(k)) * euler_number(r - 1) * euler_number(k - r - 1));
  Rational den(factorial(static_cast<unsigned long>(r - 1)) * factorial(static_cast<unsigned long>(k - r - 1)));
  den *= pow2(k - 1) * (pow2(k) - 1) * bernoulli(k);
  return num / den;
}

Rational lambda_from_lvalues(int k, int r) {
  require_lambda_range(k, r);
  const GaussianRational v = GaussianRational(4) * ell4_odd(r) * ell4_odd(k - r) / GaussianRational(ell0_even(k));
  if (!v.is_real()) throw std::logic_error("lambda came out non-real");
  return v.re();
}

RelationVector atilde_vector(int k, int j, DeltaConvention conv) {
  require_atilde_range(k, j);
  const int r = 2 * j + 1;
  const Rational lam_over = lambda(k, r) / (k - 1);
  const int doubled = conv == DeltaConvention::corrected ? k - 1 : 1;
  RelationVector v{k, {}};
  for (int p = 1; p <= k - 1; ++p) {
    Rational c = binom_q(k - p - 1, r - 1) + binom_q(k - p - 1, k - r - 1);
    c -= lam_over * (p == doubled ? 2 : 1) * pow2(k - 2 - p);
    v.coeffs.push_back(c);
  }
  return v;
}

RelationVector atilde_from_constants(int k, int j) {
  require_atilde_range(k, j);
  const int r = 2 * j + 1;
  RelationVector v{k, std::vector<Rational>(static_cast<std::size_t>(k - 1), Rational(0))};
  auto slot = [&v](int p) -> Rational& { return v.coeffs[static_cast<std::size_t>(p - 1)]; };
  // T~(r) T~(k-r) = sum_p (binom(p-1, r-1) + binom(p-1, k-r-1)) T~(k-p, p)
  for (int p = 1; p <= k - 1; ++p) slot(k - p) += binom_q(p - 1, r - 1) + binom_q(p - 1, k - r - 1);
  // and also = lambda ell0(k) = lambda/(k-1) (sum_p 2^{k-2-p} T~(p, k-p) + T~(k-1, 1)/2)
  const Rational lam_over = lambda_from_lvalues(k, r) / (k - 1);
  for (int p = 1; p <= k - 1; ++p) slot(p) -= lam_over * pow2(k - 2 - p);
  slot(k - 1) -= lam_over / 2;
  return v;
}

const std::vector<Erratum>& atilde_errata() {
  static const std::vector<Erratum> list = {
      {"a~(6,1) last entry", 6, 1, 5, make_rational(3, 4), make_rational(-3, 4)},
      {"a~(10,2) first entry", 10, 2, 1, make_rational(2580, 31), make_rational(2590, 31)},
  };
  return list;
}

UniPoly stilde_poly(int N, int k, int j) {
  require_conj_range(N, k, j);
  const int n = k - 2 * j;
  const Rational Nq(N);
  // X^{k-2} B0_n(1/(NX)) = sum_{even i} binom(n,i) B_i N^{i-n} X^{2j-2+i}
  UniPoly first;
  for (int i = 0; i <= n; i += 2) {
    Rational c = binom_q(n, i) * bernoulli(i) / pow_int(Nq, static_cast<unsigned long>(n - i));
    first += UniPoly::monomial(c, static_cast<std::size_t>(2 * j - 2 + i));
  }
  first *= pow_int(Nq, static_cast<unsigned long>(n - 1)) / n;

  UniPoly second = b0_poly(2 * j) * Rational(make_rational(1, 2 * j));

  const Rational ratio = Rational(k) * bernoulli(2 * j) * bernoulli(n) / (Rational(2 * j * n) * bernoulli(k));
  const Rational denom = 1 - pow2(-k);
  UniPoly corr = UniPoly::monomial((1 - pow2(-2 * j)) / denom / Nq, static_cast<std::size_t>(k - 2));
  corr -= UniPoly::monomial((1 - pow2(-n)) / denom / pow_int(Nq, static_cast<unsigned long>(2 * j)), 0);
  corr *= ratio;

  return first - second - corr;
}

HomogPoly p_poly(int N, int k, int j) {
  const UniPoly s = stilde_poly(N, k, j);
  const int w = k - 2;
  if (s.degree() > w) throw std::logic_error("S~ exceeds degree k-2");
  HomogPoly h(w);
  for (int e = 0; e <= s.degree(); ++e) h.coeff(e) = s.coeff(static_cast<std::size_t>(e));
  // X^e Y^{w-e} -> (X+Y)^e (-2X+2Y)^{w-e}
  return act(h, GL2Mat{1, 1, -2, 2});
}

RelationVector conj_vector(int N, int k, int j) {
  const HomogPoly shifted = act(p_poly(N, k, j).even_part(), GL2Mat::T());
  RelationVector v{k, {}};
  for (int i = 1; i <= k - 1; ++i) v.coeffs.push_back(shifted.coeff(i - 1) / binom_q(k - 2, i - 1));
  return v;
}

ExpressResult express_in_modular(int N, int k, int j) {
  const RelationVector target = conj_vector(N, k, j);
  const int count = (k - 2) / 4;
  ExpressResult res;
  if (count == 0) {
    res.consistent = true;
    for (const auto& c : target.coeffs) res.consistent = res.consistent && c == 0;
    return res;
  }
  RationalMatrix m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(count));
  for (int jj = 1; jj <= count; ++jj) {
    const RelationVector a = atilde_vector(k, jj);
    for (int p = 1; p <= k - 1; ++p) m(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(jj - 1)) = a.at(p);
  }
  if (auto sol = mat_solve(m, target.coeffs)) {
    res.consistent = true;
    res.mu = *sol;
  }
  return res;
}

SpanDims conj_span_dims(int k) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("conj_span_dims needs even k >= 6");
  std::vector<RationalVector> rows4, rows2;
  for (int j = 1; j <= (k - 2) / 2; ++j) {
    rows4.push_back(p_poly(4, k, j).even_part().coeffs());
    rows2.push_back(p_poly(2, k, j).even_part().coeffs());
  }
  const auto cols = static_cast<std::size_t>(k - 1);
  SpanDims d;
  d.dim4 = static_cast<int>(mat_rank(RationalMatrix::from_rows(rows4, cols)));
  d.dim2 = static_cast<int>(mat_rank(RationalMatrix::from_rows(rows2, cols)));
  std::vector<RationalVector> both = rows4;
  both.insert(both.end(), rows2.begin(), rows2.end());
  d.contained = static_cast<int>(mat_rank(RationalMatrix::from_rows(both, cols))) == d.dim4;
  return d;
}

}  // namespace eis4
