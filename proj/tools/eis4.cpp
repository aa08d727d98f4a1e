#include "eis4/eisenstein.hpp"
#include "eis4/json_io.hpp"
#include "eis4/period_polys.hpp"
#include "eis4/relations.hpp"
#include "eis4/suite.hpp"
#include "eis4/ttilde_numeric.hpp"
#include "eis4/verifier.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace eis4;

namespace {

enum class Format { json, csv };

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::string fmt_double(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

// CSV fields never contain commas except inside free text, which gets quoted.
std::string quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int run_qexp(const std::string& series, int k, std::optional<int> k2, int N, Format f) {
  LSeries s(1);
  if (series == "H") {
    s = eis_H(k, N);
  } else if (series == "G") {
    s = eis_G(k, N);
  } else {
    if (!k2) throw std::invalid_argument("--k2 is required for H2");
    s = eis_H2(k, *k2, N);
  }
  if (f == Format::json) {
    Json j{{"series", series}, {"k", k}};
    if (k2 && series == "H2") j["k2"] = *k2;
    j.update(to_json(s));
    emit(j);
  } else {
    std::cout << "n,coefficient\n";
    std::string c0 = constant_kind(s.constant());
    if (s.has_exact_constant()) c0 = csv_cell(s.exact_constant());
    std::cout << "0," << quote(c0) << '\n';
    for (int n = 1; n <= N; ++n) std::cout << n << ',' << quote(csv_cell(s[n])) << '\n';
  }
  return kPass;
}

int print_report(const VerifyReport& r, Format f) {
  if (f == Format::json) {
    emit(to_json(r));
  } else {
    std::cout << "claim,status,checked_through,first_failure_n\n";
    std::cout << r.claim << ',' << (r.pass ? "pass" : "fail") << ',' << r.checked_through << ','
              << (r.first_failure ? std::to_string(r.first_failure->n) : "") << '\n';
  }
  return r.pass ? kPass : kFail;
}

int run_verify(const std::string& claim, std::optional<int> k, std::optional<int> k1, std::optional<int> k2, int N,
               Format f) {
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("claim needs ") + flag);
    return *v;
  };
  if (claim == "shuffle") return print_report(verify_shuffle(need(k1, "--k1"), need(k2, "--k2"), N), f);
  if (claim == "g-decomp") return print_report(verify_G_decomp(need(k, "--k"), N), f);
  if (claim == "g-product") return print_report(verify_G_product(need(k, "--k"), N), f);
  if (claim == "im-vanish") return print_report(verify_im_vanishing(need(k, "--k"), N), f);
  if (claim == "theta") return print_report(verify_theta(N), f);
  if (claim == "c-independence") return print_report(verify_c_independence(need(k1, "--k1"), need(k2, "--k2"), N), f);
  return print_report(verify_diagonal_product(need(k1, "--k1"), need(k2, "--k2"), N), f);
}

int run_rank(int k, std::optional<int> brute_N, Format f) {
  const auto rank = static_cast<long>(mat_rank(build_Mk(k)));
  std::optional<int> brute;
  if (brute_N) brute = im_space_rank_bruteforce(k, *brute_N);
  if (f == Format::json) {
    Json j{{"rank", rank}};
    if (brute) j["bruteforce_rank"] = *brute;
    emit(j);
  } else {
    std::cout << "k,rank" << (brute ? ",bruteforce_rank" : "") << '\n';
    std::cout << k << ',' << rank;
    if (brute) std::cout << ',' << *brute;
    std::cout << '\n';
  }
  return brute && *brute != rank ? kFail : kPass;
}

int run_det(int w, Format f) {
  const DetOrd2Report r = check_det_ord2(w);
  if (f == Format::json) {
    Json j = to_json(r);
    j["matrix"] = to_json(build_Atilde(w));
    emit(j);
  } else {
    std::cout << "w,det,ord2,predicted_ord2,status\n";
    std::cout << w << ',' << to_string(r.det) << ',' << (r.ord2.is_infinite() ? "inf" : std::to_string(r.ord2.value()))
              << ',' << r.predicted << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
  return r.pass ? kPass : kFail;
}

int run_kernel(int k, Format f) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("--delta-tilde needs even k >= 6");
  const auto basis = mat_kernel(representation_matrix(delta_tilde(), k - 2));
  const int dim = static_cast<int>(basis.size());
  const bool ok = dim == (k - 2) / 4;
  if (f == Format::json) {
    Json b = Json::array();
    for (const auto& v : basis) b.push_back(to_json(v));
    emit(Json{{"k", k}, {"dim", dim}, {"expected", (k - 2) / 4}, {"basis", b}});
  } else {
    std::cout << "k,dim,expected\n" << k << ',' << dim << ',' << (k - 2) / 4 << '\n';
  }
  return ok ? kPass : kFail;
}

int run_relations(int k, std::optional<int> j, bool literal, Format f) {
  const DeltaConvention conv = literal ? DeltaConvention::paper_literal : DeltaConvention::corrected;
  const int lo = j ? *j : 1, hi = j ? *j : (k - 2) / 4;
  if (hi < lo) throw std::invalid_argument("no relations at this weight");
  const char* conv_name = literal ? "paper_literal" : "corrected";
  if (f == Format::json) {
    Json list = Json::array();
    for (int jj = lo; jj <= hi; ++jj) {
      Json e = to_json(atilde_vector(k, jj, conv));
      e["j"] = jj;
      e["lambda"] = to_string(lambda(k, 2 * jj + 1));
      list.push_back(e);
    }
    Json errata = Json::array();
    for (const Erratum& e : atilde_errata())
      if (e.k == k && e.j >= lo && e.j <= hi)
        errata.push_back({{"name", e.name}, {"j", e.j}, {"p", e.p}, {"printed", to_string(e.printed)},
                          {"corrected", to_string(e.corrected)}});
    emit(Json{{"k", k}, {"convention", conv_name}, {"relations", list}, {"errata", errata}});
  } else {
    std::cout << "k,j,convention,p,coeff\n";
    for (int jj = lo; jj <= hi; ++jj) {
      const RelationVector v = atilde_vector(k, jj, conv);
      for (int p = 1; p <= k - 1; ++p) std::cout << k << ',' << jj << ',' << conv_name << ',' << p << ',' << to_string(v.at(p)) << '\n';
    }
  }
  return kPass;
}

int run_conjecture(int N, int k, int j, Format f) {
  const RelationVector v = conj_vector(N, k, j);
  if (f == Format::json) {
    emit(Json{{"N", N}, {"k", k}, {"j", j}, {"coeffs", to_json(v.coeffs)}, {"stilde", to_json(stilde_poly(N, k, j).coeffs())}});
  } else {
    std::cout << "N,k,j,i,a\n";
    for (int i = 1; i <= k - 1; ++i) std::cout << N << ',' << k << ',' << j << ',' << i << ',' << to_string(v.at(i)) << '\n';
  }
  return kPass;
}

int run_express(int N, int k, int j, Format f) {
  const ExpressResult r = express_in_modular(N, k, j);
  if (f == Format::json) {
    emit(Json{{"N", N}, {"k", k}, {"j", j}, {"consistent", r.consistent}, {"mu", to_json(r.mu)}});
  } else {
    std::cout << "N,k,j,consistent,jprime,mu\n";
    for (std::size_t i = 0; i < r.mu.size(); ++i)
      std::cout << N << ',' << k << ',' << j << ',' << (r.consistent ? "true" : "false") << ',' << i + 1 << ','
                << to_string(r.mu[i]) << '\n';
    if (r.mu.empty()) std::cout << N << ',' << k << ',' << j << ',' << (r.consistent ? "true" : "false") << ",,\n";
  }
  return r.consistent ? kPass : kFail;
}

int run_ttilde(int k1, std::optional<int> k2, double tol, Format f) {
  const NumericTValue t = k2 ? ttilde_double(k1, *k2, tol) : ttilde_single(k1);
  if (f == Format::json) {
    Json j{{"k1", k1}};
    if (k2) j["k2"] = *k2;
    j.update(to_json(t));
    emit(j);
  } else {
    std::cout << "k1,k2,re,im,est_error,method\n";
    std::cout << k1 << ',' << (k2 ? std::to_string(*k2) : "") << ',' << fmt_double(t.value.real()) << ','
              << fmt_double(t.value.imag()) << ',' << fmt_double(t.est_error) << ',' << to_string(t.method) << '\n';
  }
  return kPass;
}

int run_suite(const SuiteOptions& o, Format f) {
  const RunManifest m = paper_suite(o);
  if (f == Format::json) {
    Json claims = Json::array();
    for (const auto& c : m.claims)
      claims.push_back({{"id", c.id}, {"group", c.group}, {"params", c.params}, {"status", c.pass ? "pass" : "fail"},
                        {"detail", c.detail}});
    emit(Json{{"suite", m.suite}, {"paper_literal", o.paper_literal}, {"claims", claims},
              {"status", m.pass ? "pass" : "fail"}});
  } else {
    std::cout << "id,group,params,status,detail\n";
    for (const auto& c : m.claims)
      std::cout << c.id << ',' << c.group << ',' << quote(c.params) << ',' << (c.pass ? "pass" : "fail") << ','
                << quote(c.detail) << '\n';
  }
  // Timings are not deterministic, so they stay off stdout.
  std::cerr << std::left << std::setw(22) << "claim" << std::setw(12) << "group" << std::setw(8) << "status"
            << "seconds\n";
  for (const auto& c : m.claims)
    std::cerr << std::setw(22) << c.id << std::setw(12) << c.group << std::setw(8) << (c.pass ? "pass" : "FAIL")
              << std::fixed << std::setprecision(3) << c.wall_seconds << '\n';
  std::cerr << "overall: " << (m.pass ? "pass" : "FAIL") << '\n';
  return m.pass ? kPass : kFail;
}

void add_format(CLI::App* cmd, Format& f) {
  cmd->add_option("--format", f, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}))
      ->default_str("json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eis4: exact q-expansions, identities and relations for level-4 double Eisenstein series"};
  app.require_subcommand(1);
  Format format = Format::json;
  int terms = default_truncation();

  // qexp
  auto* qexp = app.add_subcommand("qexp", "Print a q-expansion");
  std::string series;
  int qk = 0;
  std::optional<int> qk2;
  qexp->add_option("--series", series, "H, G or H2")->required()->check(CLI::IsMember({"H", "G", "H2"}));
  qexp->add_option("--k", qk, "Weight (first weight for H2)")->required();
  qexp->add_option("--k2", qk2, "Second weight for H2");
  qexp->add_option("--terms", terms, "Truncation (default EIS4_TERMS or 40)")->check(CLI::PositiveNumber);
  add_format(qexp, format);

  // verify
  auto* verify = app.add_subcommand("verify", "Exact coefficient-wise verification of an identity");
  std::string claim;
  std::optional<int> vk, vk1, vk2;
  verify->add_option("--claim", claim, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"shuffle", "g-decomp", "g-product", "im-vanish", "theta", "c-independence", "diagonal"}));
  verify->add_option("--k", vk, "Weight");
  verify->add_option("--k1", vk1, "First weight");
  verify->add_option("--k2", vk2, "Second weight");
  verify->add_option("--terms", terms, "Coefficients compared")->check(CLI::PositiveNumber);
  add_format(verify, format);

  // rank
  auto* rank = app.add_subcommand("rank", "Rank of M_k");
  int mk = 0;
  std::optional<int> brute;
  rank->add_option("--mk", mk, "Weight k >= 2")->required();
  rank->add_option("--bruteforce", brute, "Also compute the Im-space rank from q-expansions to this many terms");
  add_format(rank, format);

  // det
  auto* det = app.add_subcommand("det", "Determinant of the period matrix A~_w");
  int aw = 0;
  det->add_option("--aw", aw, "Even w >= 6")->required();
  add_format(det, format);

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Kernel of Delta~ on V_k");
  int dk = 0;
  kernel->add_option("--delta-tilde", dk, "Even k >= 6")->required();
  add_format(kernel, format);

  // relations
  auto* relations = app.add_subcommand("relations", "Relation vectors among double values");
  int rk = 0;
  std::optional<int> rj;
  bool literal = false;
  relations->add_option("--k", rk, "Even weight >= 6")->required();
  relations->add_option("--j", rj, "1 <= j <= [(k-2)/4]; all when omitted");
  relations->add_flag("--paper-literal", literal, "Double the p = 1 term as printed");
  add_format(relations, format);

  // conjecture / express
  int cN = 0, ck = 0, cj = 0;
  auto* conjecture = app.add_subcommand("conjecture", "Coefficient vector a_{N,k,j,i}");
  conjecture->add_option("--N", cN, "Level 2 or 4")->required()->check(CLI::IsMember({2, 4}));
  conjecture->add_option("--k", ck, "Even weight >= 4")->required();
  conjecture->add_option("--j", cj, "1 <= j <= (k-2)/2")->required();
  add_format(conjecture, format);
  auto* express = app.add_subcommand("express", "Express a conjectured relation through the modular ones");
  express->add_option("--N", cN, "Level 2 or 4")->required()->check(CLI::IsMember({2, 4}));
  express->add_option("--k", ck, "Even weight >= 4")->required();
  express->add_option("--j", cj, "1 <= j <= (k-2)/2")->required();
  add_format(express, format);

  // ttilde
  auto* ttilde = app.add_subcommand("ttilde", "Numeric T~(k1) or T~(k1,k2)");
  int tk1 = 0;
  std::optional<int> tk2;
  double tol = 1e-10;
  ttilde->add_option("--k1", tk1, "First weight")->required();
  ttilde->add_option("--k2", tk2, "Second weight");
  ttilde->add_option("--tol", tol, "Agreement required between the two summation strategies")->check(CLI::PositiveNumber);
  add_format(ttilde, format);

  // paper-suite
  auto* suite = app.add_subcommand("paper-suite", "Run every reproducible claim");
  SuiteOptions so;
  suite->add_option("--only", so.only, "Restrict to one group")->check(CLI::IsMember(suite_groups()));
  suite->add_flag("--paper-literal", so.paper_literal, "Use the printed doubled-term placement");
  suite->add_option("--terms", so.terms, "Coefficients compared in exact checks")->check(CLI::PositiveNumber);
  suite->add_option("--jobs", so.jobs, "Claims run concurrently")->check(CLI::PositiveNumber);
  add_format(suite, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*qexp) return run_qexp(series, qk, qk2, terms, format);
    if (*verify) return run_verify(claim, vk, vk1, vk2, terms, format);
    if (*rank) return run_rank(mk, brute, format);
    if (*det) return run_det(aw, format);
    if (*kernel) return run_kernel(dk, format);
    if (*relations) return run_relations(rk, rj, literal, format);
    if (*conjecture) return run_conjecture(cN, ck, cj, format);
    if (*express) return run_express(cN, ck, cj, format);
    if (*ttilde) return run_ttilde(tk1, tk2, tol, format);
    if (*suite) return run_suite(so, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
