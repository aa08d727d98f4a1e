#include "eis4/suite.hpp"

#include "eis4/identities.hpp"
#include "eis4/period_polys.hpp"
#include "eis4/relations.hpp"
#include "eis4/special_numbers.hpp"
#include "eis4/ttilde_numeric.hpp"
#include "eis4/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eis4 {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int checked = 0;

  void fail(const std::string& what) {
    if (pass) detail = what;  // keep the first failure
    pass = false;
  }
  void count(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
  void finish(const std::string& unit) {
    if (pass) detail = std::to_string(checked) + " " + unit + " checked";
  }
};

struct Claim {
  std::string id;
  std::string group;
  std::string params;
  std::function<Outcome()> run;
};

std::string pair_tag(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<Rational> parse_list(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

std::vector<Claim> build_claims(const SuiteOptions& o) {
  const int N = o.terms;
  const std::string nt = "N=" + std::to_string(N);
  const DeltaConvention conv = o.paper_literal ? DeltaConvention::paper_literal : DeltaConvention::corrected;
  std::vector<Claim> c;

  c.push_back({"shuffle", "shuffle", "k1+k2<=12, " + nt, [N] {
                 Outcome r;
                 for (int K = 2; K <= 12; ++K)
                   for (int k1 = 1; k1 < K; ++k1) r.count(verify_shuffle(k1, K - k1, N).pass, pair_tag(k1, K - k1));
                 r.finish("weight pairs");
                 return r;
               }});
  c.push_back({"g-decomp", "eisenstein", "even k in 4..12, " + nt, [N] {
                 Outcome r;
                 for (int k = 4; k <= 12; k += 2) r.count(verify_G_decomp(k, N).pass, "k=" + std::to_string(k));
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"g-product", "eisenstein", "even k in 4..12, " + nt, [N] {
                 Outcome r;
                 for (int k = 4; k <= 12; k += 2) r.count(verify_G_product(k, N).pass, "k=" + std::to_string(k));
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"theta", "theta", "N=100", [] {
                 Outcome r;
                 r.count(verify_theta(100).pass, "theta^2 mismatch");
                 r.finish("series");
                 return r;
               }});
  c.push_back({"c-independence", "theta", "k1+k2<=12, " + nt, [N] {
                 Outcome r;
                 for (int K = 2; K <= 12; ++K)
                   for (int k1 = 1; k1 < K; ++k1)
                     r.count(verify_c_independence(k1, K - k1, N).pass, pair_tag(k1, K - k1));
                 r.finish("weight pairs");
                 return r;
               }});
  c.push_back({"mk-rank", "rank", "3<=k<=40", [] {
                 Outcome r;
                 for (int k = 3; k <= 40; ++k) {
                   const long expected = k % 2 == 0 ? 3 * k / 4 - 1 : k - 2;
                   const long rank = static_cast<long>(mat_rank(build_Mk(k)));
                   r.count(rank == expected && im_delta_dim(k) == rank, "k=" + std::to_string(k));
                 }
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"im-rank-bruteforce", "rank", "3<=k<=14, N=40", [] {
                 Outcome r;
                 for (int k = 3; k <= 14; ++k)
                   r.count(im_space_rank_bruteforce(k, 40) == static_cast<int>(mat_rank(build_Mk(k))),
                           "k=" + std::to_string(k));
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"im-vanish", "rank", "odd k in 3..13, " + nt, [N] {
                 Outcome r;
                 for (int k = 3; k <= 13; k += 2) {
                   const VerifyReport v = verify_im_vanishing(k, N);
                   r.count(v.pass && v.witness.has_value(), "k=" + std::to_string(k));
                 }
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"det-ord2", "period", "even w in 6..40", [] {
                 Outcome r;
                 for (int w = 6; w <= 40; w += 2) r.count(check_det_ord2(w).pass, "w=" + std::to_string(w));
                 const DetOrd2Report a6 = check_det_ord2(6);
                 r.count(a6.det == -180 && a6.ord2 == Valuation(2), "det A~_6 anchor");
                 r.finish("determinants");
                 return r;
               }});
  c.push_back({"period-symmetry", "period", "w<=30", [] {
                 Outcome r;
                 for (int w = 3; w <= 30; ++w)
                   for (int n = 1; n < w; ++n)
                     for (int m = 1; m < w; ++m) {
                       if ((m + n) % 2 == 0 || w - m <= n || w - n <= m) continue;
                       r.count(r_period(w, n, m) == r_period(w, m, n), "w=" + std::to_string(w) + " " + pair_tag(n, m));
                     }
                 r.finish("index pairs");
                 return r;
               }});
  c.push_back({"delta-tilde-kernel", "kernel", "even k in 6..40", [] {
                 Outcome r;
                 for (int k = 6; k <= 40; k += 2)
                   r.count(delta_tilde_kernel_dim(k) == (k - 2) / 4, "k=" + std::to_string(k));
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"atilde-printed", "examples", o.paper_literal ? "paper-literal" : "corrected", [conv] {
                 Outcome r;
                 // the printed lists, with the two errata entries replaced by their corrected values
                 r.count(atilde_vector(6, 1, conv).coeffs == parse_list({"6", "3", "1/2", "-3/4", "-3/4"}), "(6,1)");
                 r.count(atilde_vector(8, 1, conv).coeffs ==
                             parse_list({"210/17", "105/17", "44/17", "27/34", "-7/68", "-75/136", "-75/136"}),
                         "(8,1)");
                 r.count(atilde_vector(10, 1, conv).coeffs == parse_list({"28/31", "14/31", "69/31", "193/62", "317/124",
                                                                          "317/248", "69/496", "-427/992", "-427/992"}),
                         "(10,1)");
                 r.count(atilde_vector(10, 2, conv).coeffs ==
                             parse_list({"2590/31", "1295/31", "985/62", "365/124", "-379/248", "-875/496", "-875/992",
                                         "-875/1984", "-875/1984"}),
                         "(10,2)");
                 for (const Erratum& e : atilde_errata())
                   r.count(atilde_vector(e.k, e.j, conv).at(e.p) == e.corrected && e.printed != e.corrected, e.name);
                 r.finish("vectors and errata");
                 return r;
               }});
  c.push_back({"conj-vectors", "examples", "(4,6,1) (2,8,1) (4,10,3)", [] {
                 Outcome r;
                 r.count(conj_vector(4, 6, 1).coeffs == parse_list({"-8", "-4", "-2/3", "1", "1"}), "(4,6,1)");
                 r.count(conj_vector(2, 8, 1).coeffs == parse_list({"-1792/51", "-896/51", "-5632/765", "-192/85",
                                                                    "224/765", "80/51", "80/51"}),
                         "(2,8,1)");
                 r.count(conj_vector(4, 10, 3).coeffs ==
                             parse_list({"-6144/31", "-3072/31", "-25808/651", "-2152/217", "3824/3255", "640/217",
                                         "1270/651", "45/31", "45/31"}),
                         "(4,10,3)");
                 r.finish("vectors");
                 return r;
               }});
  c.push_back({"express", "examples", "(4,6,1) (2,8,1) (4,10,3)", [] {
                 Outcome r;
                 auto check = [&r](int n, int k, int j, std::initializer_list<const char*> mu) {
                   const ExpressResult e = express_in_modular(n, k, j);
                   r.count(e.consistent && e.mu == parse_list(mu), "(" + std::to_string(n) + "," + std::to_string(k) +
                                                                      "," + std::to_string(j) + ")");
                 };
                 check(4, 6, 1, {"-4/3"});
                 check(2, 8, 1, {"-128/45"});
                 check(4, 10, 3, {"-20/21", "-248/105"});
                 r.finish("multiplier sets");
                 return r;
               }});
  c.push_back({"conj-span-dims", "conjecture", "even k in 6..30", [] {
                 Outcome r;
                 for (int k = 6; k <= 30; k += 2) {
                   const SpanDims d = conj_span_dims(k);
                   r.count(d.dim4 == (k - 2) / 4 && d.dim2 == (k - 2) / 6 && d.contained, "k=" + std::to_string(k));
                 }
                 r.finish("weights");
                 return r;
               }});
  c.push_back({"numeric-relations", "numeric", std::string("k in 6..12, tol=1e-6") + (o.paper_literal ? ", paper-literal" : ""),
               [lit = o.paper_literal] {
                 Outcome r;
                 for (int k = 6; k <= 12; k += 2)
                   for (int j = 1; j <= (k - 2) / 4; ++j) {
                     const RelationNumericReport n = verify_relation_numeric(k, j, 1e-6, lit);
                     std::ostringstream s;
                     s << pair_tag(k, j) << " residual " << std::abs(n.residual);
                     r.count(n.pass, s.str());
                   }
                 r.finish("relations");
                 return r;
               }});
  c.push_back({"lattice", "lattice", "(2,3),(3,4) at tau=0.8i,i, tol=1e-6", [] {
                 Outcome r;
                 for (auto [k1, k2] : {std::pair{2, 3}, {3, 4}})
                   for (double y : {0.8, 1.0}) {
                     const LatticeComparison l = compare_lattice(k1, k2, {0, y}, 2000, 40, 1e-6);
                     std::ostringstream s;
                     s << pair_tag(k1, k2) << " Im(tau)=" << y << " diff " << l.abs_diff;
                     r.count(l.pass && l.rel_diff < 1e-8, s.str());
                   }
                 r.finish("evaluations");
                 return r;
               }});
  c.push_back({"identities", "identities", "finite Bernoulli, Euler and binomial identities", [] {
                 Outcome r;
                 for (long k = 4; k <= 100; k += 2)
                   r.count(bernoulli_euler_lhs(k) == bernoulli_euler_rhs(k), "Bernoulli-Euler k=" + std::to_string(k));
                 for (long n = 1; n <= 99; n += 2)
                   for (long k = 1; k <= 12; ++k)
                     r.count(euler_shift_sum_lhs(n, k) == euler_shift_sum_rhs(n, k), "Euler shift");
                 for (long k = 0; k <= 12; ++k)
                   for (long num = -3; num <= 5; ++num) {
                     const Rational x = make_rational(num, 7);
                     r.count(euler_poly(k, 1 - x) == (k % 2 ? -1 : 1) * euler_poly(k, x), "Euler reflection");
                   }
                 for (long a = 0; a <= 12; ++a)
                   for (long b = 0; b <= 12; ++b)
                     for (long mu = 0; mu <= std::min(12L, a + b); ++mu)
                       r.count(binomial_identity_holds(a, b, mu), "binomial");
                 std::mt19937 rng(12345);
                 std::uniform_int_distribution<int> d(-20, 20);
                 for (long k1 = 1; k1 <= 8; ++k1)
                   for (long k2 = 1; k2 <= 8; ++k2) {
                     std::vector<Rational> a, b;
                     for (long i = 0; i <= k1 + k2; ++i) {
                       a.push_back(make_rational(d(rng), 1 + std::abs(d(rng))));
                       b.push_back(make_rational(d(rng), 1 + std::abs(d(rng))));
                     }
                     r.count(sequence_identity_first_holds(k1, k2, a, b) && sequence_identity_second_holds(k1, k2, a, b),
                             "sequence " + pair_tag(static_cast<int>(k1), static_cast<int>(k2)));
                   }
                 r.finish("instances");
                 return r;
               }});
  return c;
}

ClaimResult run_claim(const Claim& c) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimResult res{c.id, c.group, c.params, false, "", 0};
  try {
    const Outcome o = c.run();
    res.pass = o.pass;
    res.detail = o.detail;
  } catch (const std::exception& e) {
    res.detail = std::string("exception: ") + e.what();
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> g = {"shuffle", "eisenstein", "theta",  "rank",    "period",   "kernel",
                                             "examples", "conjecture", "numeric", "lattice", "identities"};
  return g;
}

RunManifest paper_suite(const SuiteOptions& opts) {
  if (!opts.only.empty() && std::find(suite_groups().begin(), suite_groups().end(), opts.only) == suite_groups().end())
    throw std::invalid_argument("unknown group: " + opts.only);
  if (opts.terms < 1) throw std::invalid_argument("terms must be >= 1");

  std::vector<Claim> claims;
  for (auto& c : build_claims(opts))
    if (opts.only.empty() || c.group == opts.only) claims.push_back(std::move(c));

  RunManifest m;
  m.suite = opts.only.empty() ? "full" : opts.only;
  if (opts.jobs > 1) {
    std::vector<std::future<ClaimResult>> pending;
    for (const auto& c : claims) pending.push_back(std::async(std::launch::async, run_claim, c));
    for (auto& f : pending) m.claims.push_back(f.get());
  } else {
    for (const auto& c : claims) m.claims.push_back(run_claim(c));
  }
  m.pass = std::all_of(m.claims.begin(), m.claims.end(), [](const ClaimResult& r) { return r.pass; });
  return m;
}

}  // namespace eis4
