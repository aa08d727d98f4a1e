#include "eis4/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace eis4 {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

Json to_json(const LForm& f) {
  Json j = Json::object();
  for (const auto& [g, c] : f.terms()) j[g.name()] = to_json(c);
  return j;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const HomogPoly& p) { return Json{{"degree", p.degree()}, {"coeffs", to_json(p.coeffs())}}; }

Json to_json(const LSeries& s) {
  Json c = Json{{"kind", constant_kind(s.constant())}};
  if (auto* e = std::get_if<ConstExact<LForm>>(&s.constant())) c["value"] = to_json(e->value);
  if (auto* t = std::get_if<ConstOpaqueT>(&s.constant())) c["k"] = t->k;
  if (auto* t2 = std::get_if<ConstOpaqueT2>(&s.constant())) c["k"] = {t2->k1, t2->k2};
  if (auto* p = std::get_if<ConstOpaqueProduct<LForm>>(&s.constant()))
    c["factors"] = Json::array({to_json(p->left), to_json(p->right)});
  Json coeffs = Json::array();
  for (int n = 1; n <= s.truncation(); ++n) coeffs.push_back(to_json(s[n]));
  return Json{{"terms", s.truncation()}, {"constant", c}, {"coefficients", coeffs}};
}

Json to_json(const VerifyReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j{{"claim", r.claim}, {"params", params}, {"status", r.pass ? "pass" : "fail"},
         {"checked_through", r.checked_through}};
  if (r.first_failure)
    j["first_failure"] = {{"n", r.first_failure->n},
                          {"lhs", to_json(r.first_failure->lhs)},
                          {"rhs", to_json(r.first_failure->rhs)}};
  else
    j["first_failure"] = nullptr;
  if (r.witness) j["witness"] = {{"n", r.witness->n}, {"value", to_json(r.witness->value)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const RelationVector& v) { return Json{{"k", v.k}, {"coeffs", to_json(v.coeffs)}}; }

Json to_json(const NumericTValue& t) {
  return Json{{"value", {{"re", t.value.real()}, {"im", t.value.imag()}}},
              {"est_error", t.est_error},
              {"method", to_string(t.method)}};
}

Json to_json(const DetOrd2Report& r) {
  Json j{{"w", r.w}, {"det", to_string(r.det)}};
  if (r.ord2.is_infinite())
    j["ord2"] = "inf";
  else
    j["ord2"] = r.ord2.value();
  j["predicted_ord2"] = r.predicted;
  j["status"] = r.pass ? "pass" : "fail";
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

GaussianRational gaussian_from_json(const Json& j) {
  return GaussianRational(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
}

LForm lform_from_json(const Json& j) {
  LForm f;
  for (const auto& [name, value] : j.items()) f += LForm(LGen::parse(name), gaussian_from_json(value));
  return f;
}

std::string csv_cell(const GaussianRational& z) {
  if (z.im() == 0) return to_string(z.re());
  if (z.re() == 0) return to_string(z.im()) + "i";
  return to_string(z.re()) + (z.im() > 0 ? "+" : "") + to_string(z.im()) + "i";
}

std::string csv_cell(const LForm& f) {
  if (f.is_zero()) return "0/1";
  std::string s;
  for (const auto& [g, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + csv_cell(c) + ")";
    if (g.kind != LGen::Kind::One) s += "*" + g.name();
  }
  return s;
}

}  // namespace eis4
