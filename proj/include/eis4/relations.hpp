#pragma once

#include "eis4/period_polys.hpp"
#include "eis4/poly.hpp"
#include "eis4/rational.hpp"

#include <string>
#include <vector>

namespace eis4 {

/// Coefficients of a linear relation among the weight-k double values: coeffs[p-1]
/// multiplies T~(p, k-p), p = 1..k-1.
struct RelationVector {
  int k = 0;
  std::vector<Rational> coeffs;

  const Rational& at(int p) const { return coeffs.at(static_cast<std::size_t>(p - 1)); }
  friend bool operator==(const RelationVector&, const RelationVector&) = default;
};

/// Where the doubled term of a~ sits. `corrected` doubles p = k-1, which is what the
/// constant terms of the G~ decomposition force; `paper_literal` doubles p = 1 as printed.
enum class DeltaConvention { corrected, paper_literal };

/// lambda_{k,r} through the Euler/Bernoulli closed form. Even k >= 4, odd 3 <= r <= k-3.
Rational lambda(int k, int r);
/// lambda_{k,r} = 4 ell4(r) ell4(k-r) / ell0(k), evaluated from the normalized L-values.
Rational lambda_from_lvalues(int k, int r);

/// a~_{k,j,p} for even k >= 6 and 1 <= j <= [(k-2)/4], with r = 2j+1.
RelationVector atilde_vector(int k, int j, DeltaConvention conv = DeltaConvention::corrected);
/// The same relation rebuilt from constant terms: the shuffle of T~(r) T~(k-r) minus
/// lambda/(k-1) times the constant of the G~ decomposition.
RelationVector atilde_from_constants(int k, int j);

/// A coefficient printed in the worked examples that disagrees with the formula.
struct Erratum {
  std::string name;
  int k = 0;
  int j = 0;
  int p = 0;
  Rational printed;
  Rational corrected;
};
const std::vector<Erratum>& atilde_errata();

/// S~_{N,k,j}(X) for N in {2, 4}, even k >= 4, 1 <= j <= (k-2)/2.
UniPoly stilde_poly(int N, int k, int j);
/// (-2X + 2Y)^{k-2} S~((X+Y)/(-2X+2Y)), homogeneous of degree k-2.
HomogPoly p_poly(int N, int k, int j);
/// a_{N,k,j,i}, i = 1..k-1, read off P^ev(X+Y, Y).
RelationVector conj_vector(int N, int k, int j);

struct ExpressResult {
  bool consistent = false;
  std::vector<Rational> mu;  // one multiplier per a~_{k,j'}, j' = 1..[(k-2)/4]
};
/// Solves conj_vector(N,k,j) = sum_{j'} mu_{j'} atilde_vector(k, j') exactly.
ExpressResult express_in_modular(int N, int k, int j);

struct SpanDims {
  int dim4 = 0;
  int dim2 = 0;
  bool contained = false;
};
/// Dimensions of span{P^ev_{4,k,j}} and span{P^ev_{2,k,j}}, and whether the second lies
/// in the first. Even k >= 6.
SpanDims conj_span_dims(int k);

}  // namespace eis4
