#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eis4/eisenstein.hpp"
#include "eis4/verifier.hpp"

using namespace eis4;

namespace {

bool same_report(const VerifyReport& a, const VerifyReport& b) {
  return a.claim == b.claim && a.params == b.params && a.pass == b.pass && a.checked_through == b.checked_through &&
         a.first_failure.has_value() == b.first_failure.has_value() && a.witness.has_value() == b.witness.has_value() &&
         (!a.witness || (a.witness->n == b.witness->n && a.witness->value == b.witness->value));
}

}  // namespace

TEST_CASE("shuffle examples") {
  CHECK(verify_shuffle(1, 1, 20).pass);
  CHECK(verify_shuffle(3, 4, 30).pass);
  CHECK(verify_shuffle(2, 2, 30).pass);
  const VerifyReport r = verify_shuffle(2, 5, 12);
  CHECK(r.claim == "shuffle");
  CHECK(r.checked_through == 12);
  CHECK(!r.first_failure);
  CHECK_THROWS_AS(verify_shuffle(0, 2, 10), std::invalid_argument);
}

TEST_CASE("shuffle sweep at small weight") {
  for (int K = 2; K <= 8; ++K)
    for (int k1 = 1; k1 < K; ++k1) CHECK_MESSAGE(verify_shuffle(k1, K - k1, 20).pass, k1 << "," << K - k1);
}

TEST_CASE("Eisenstein decompositions") {
  for (int k = 4; k <= 8; k += 2) {
    CHECK(verify_G_decomp(k, 30).pass);
    CHECK(verify_G_product(k, 30).pass);
  }
  CHECK(verify_G_product(10, 30).pass);
  CHECK_THROWS_AS(verify_G_decomp(5, 30), std::invalid_argument);
  CHECK_THROWS_AS(verify_G_product(7, 30), std::invalid_argument);
}

TEST_CASE("imaginary part vanishing with a witness") {
  for (int k : {3, 5, 7}) {
    const VerifyReport r = verify_im_vanishing(k, 20);
    CHECK(r.pass);
    REQUIRE(r.witness);
    CHECK(!r.witness->value.is_zero());
  }
  CHECK_THROWS_AS(verify_im_vanishing(4, 20), std::invalid_argument);
}

TEST_CASE("theta identity") {
  CHECK(verify_theta(100).pass);
  const LSeries t = series_scale(eis_H(1, 10), GaussianRational(4) * GaussianRational::i());
  CHECK(t[5] == LForm(8));
  CHECK(t[3].is_zero());
}

TEST_CASE("free constant independence") {
  for (int K = 2; K <= 8; ++K)
    for (int k1 = 1; k1 < K; ++k1) CHECK(verify_c_independence(k1, K - k1, 20).pass);
}

TEST_CASE("reports are deterministic") {
  CHECK(same_report(verify_shuffle(3, 4, 15), verify_shuffle(3, 4, 15)));
  CHECK(same_report(verify_im_vanishing(5, 15), verify_im_vanishing(5, 15)));
}

TEST_CASE("lattice oracle against the q-expansion") {
  const LatticeComparison a = compare_lattice(2, 3, {0, 0.8}, 400, 40, 1e-6);
  CHECK(a.pass);
  CHECK(a.rel_diff < 1e-8);
  const LatticeComparison b = compare_lattice(3, 4, {0, 1}, 400, 40, 1e-6);
  CHECK(b.pass);
  CHECK(b.rel_diff < 1e-8);
  // off the imaginary axis as well
  const LatticeComparison c = compare_lattice(2, 4, {0.3, 0.9}, 400, 40, 1e-6);
  CHECK(c.rel_diff < 1e-8);
  CHECK_THROWS_AS(lattice_oracle(1, 2, {0, 1}, 100), std::invalid_argument);
  CHECK_THROWS_AS(lattice_oracle(2, 3, {0, -1}, 100), std::invalid_argument);
}

TEST_CASE("lattice oracle sees a wrong coefficient") {
  LSeries h = eis_H2(2, 3, 40);
  const std::complex<double> tau(0, 0.8);
  const std::complex<double> good = evaluate_series(h, tau);
  h[1] += LForm(GaussianRational(make_rational(1, 1000)));
  const std::complex<double> bad = evaluate_series(h, tau);
  const std::complex<double> lat = lattice_oracle(2, 3, tau, 400);
  CHECK(std::abs(lat - good) < 1e-8 * std::abs(lat));
  CHECK(std::abs(lat - bad) > 1e-4 * std::abs(lat));
}
