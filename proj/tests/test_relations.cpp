#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eis4/matrix.hpp"
#include "eis4/relations.hpp"

using namespace eis4;

namespace {

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

}  // namespace

TEST_CASE("lambda values") {
  CHECK(lambda(6, 3) == make_rational(15, 4));
  CHECK(lambda(8, 3) == make_rational(525, 136));
  for (int k = 6; k <= 30; k += 2)
    for (int r = 3; r <= k - 3; r += 2) {
      CHECK(lambda(k, r) == lambda(k, k - r));
      CHECK(lambda(k, r) == lambda_from_lvalues(k, r));
    }
  CHECK_THROWS_AS(lambda(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(lambda(8, 4), std::invalid_argument);
  CHECK_THROWS_AS(lambda(8, 1), std::invalid_argument);
}

TEST_CASE("a~ vectors against the worked examples") {
  CHECK(atilde_vector(8, 1).coeffs == q({"210/17", "105/17", "44/17", "27/34", "-7/68", "-75/136", "-75/136"}));
  CHECK(atilde_vector(6, 1).coeffs == q({"6", "3", "1/2", "-3/4", "-3/4"}));
  CHECK(atilde_vector(10, 1).coeffs ==
        q({"28/31", "14/31", "69/31", "193/62", "317/124", "317/248", "69/496", "-427/992", "-427/992"}));
  // printed list except the first entry, see atilde_errata()
  CHECK(atilde_vector(10, 2).coeffs ==
        q({"2590/31", "1295/31", "985/62", "365/124", "-379/248", "-875/496", "-875/992", "-875/1984", "-875/1984"}));
  CHECK_THROWS_AS(atilde_vector(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(atilde_vector(7, 1), std::invalid_argument);
}

TEST_CASE("errata carry both values and the formula gives the corrected one") {
  const auto& list = atilde_errata();
  REQUIRE(list.size() == 2);
  for (const Erratum& e : list) {
    CHECK(e.printed != e.corrected);
    CHECK(atilde_vector(e.k, e.j).at(e.p) == e.corrected);
    CHECK(atilde_from_constants(e.k, e.j).at(e.p) == e.corrected);
  }
}

TEST_CASE("constant-term derivation fixes the doubled slot") {
  for (int k = 6; k <= 20; k += 2)
    for (int j = 1; j <= (k - 2) / 4; ++j) {
      CHECK(atilde_vector(k, j) == atilde_from_constants(k, j));
      CHECK(atilde_vector(k, j, DeltaConvention::paper_literal) != atilde_from_constants(k, j));
    }
}

TEST_CASE("a~ vectors are independent") {
  for (int k = 6; k <= 30; k += 2) {
    const int d = (k - 2) / 4;
    std::vector<RationalVector> rows;
    for (int j = 1; j <= d; ++j) rows.push_back(atilde_vector(k, j).coeffs);
    CHECK(static_cast<int>(mat_rank(RationalMatrix::from_rows(rows, static_cast<std::size_t>(k - 1)))) == d);
  }
}

TEST_CASE("S~ polynomial") {
  for (int N : {2, 4})
    for (int k = 4; k <= 16; k += 2)
      for (int j = 1; j <= (k - 2) / 2; ++j) CHECK(stilde_poly(N, k, j).degree() <= k - 2);
  // k=6, N=4, j=1: direct expansion
  CHECK(stilde_poly(4, 6, 1).coeffs() == q({"-1/32", "0", "1/2", "0", "-1/2"}));
  CHECK_THROWS_AS(stilde_poly(3, 6, 1), std::invalid_argument);
  CHECK_THROWS_AS(stilde_poly(4, 6, 3), std::invalid_argument);
}

TEST_CASE("P polynomial is homogeneous of degree k-2") {
  for (int k = 4; k <= 12; k += 2) CHECK(p_poly(4, k, 1).degree() == k - 2);
}

TEST_CASE("conjecture vectors against the worked examples") {
  CHECK(conj_vector(4, 6, 1).coeffs == q({"-8", "-4", "-2/3", "1", "1"}));
  CHECK(conj_vector(2, 8, 1).coeffs ==
        q({"-1792/51", "-896/51", "-5632/765", "-192/85", "224/765", "80/51", "80/51"}));
  CHECK(conj_vector(4, 10, 3).coeffs == q({"-6144/31", "-3072/31", "-25808/651", "-2152/217", "3824/3255", "640/217",
                                            "1270/651", "45/31", "45/31"}));
}

TEST_CASE("express in the modular relations") {
  auto r = express_in_modular(4, 6, 1);
  CHECK(r.consistent);
  CHECK(r.mu == q({"-4/3"}));
  r = express_in_modular(2, 8, 1);
  CHECK(r.consistent);
  CHECK(r.mu == q({"-128/45"}));
  r = express_in_modular(4, 10, 3);
  CHECK(r.consistent);
  CHECK(r.mu == q({"-20/21", "-248/105"}));
  for (int N : {2, 4})
    for (int k = 4; k <= 16; k += 2)
      for (int j = 1; j <= (k - 2) / 2; ++j) CHECK_MESSAGE(express_in_modular(N, k, j).consistent, N << "," << k << "," << j);
}

TEST_CASE("P^ev of level 2 sits inside level 4, with the conjectured dimensions") {
  CHECK(conj_span_dims(10).dim4 == 2);
  CHECK(conj_span_dims(10).dim2 == 1);
  CHECK(conj_span_dims(14).dim2 == 2);
  CHECK(conj_span_dims(6).dim2 == 0);
  for (int k = 6; k <= 20; k += 2) {
    const SpanDims d = conj_span_dims(k);
    CHECK(d.dim4 == (k - 2) / 4);
    CHECK(d.dim2 == (k - 2) / 6);
    CHECK(d.contained);
  }
  CHECK_THROWS_AS(conj_span_dims(7), std::invalid_argument);
}
