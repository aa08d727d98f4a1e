#include "eis4/lform.hpp"

#include <charconv>
#include <stdexcept>

namespace eis4 {

LGen LGen::zodd(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("Zodd needs odd m >= 1");
  return {Kind::Zodd, m};
}

LGen LGen::leven(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("Leven needs even m >= 2");
  return {Kind::Leven, m};
}

std::string LGen::name() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::Zodd: return "Z" + std::to_string(m);
    case Kind::Leven: return "L" + std::to_string(m);
  }
  return "?";
}

LGen LGen::parse(std::string_view name) {
  if (name == "1") return one();
  if (name.size() < 2 || (name[0] != 'Z' && name[0] != 'L'))
    throw std::invalid_argument("unknown generator: " + std::string(name));
  int m = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, m);
  if (ec != std::errc() || ptr != last) throw std::invalid_argument("unknown generator: " + std::string(name));
  return name[0] == 'Z' ? zodd(m) : leven(m);
}

LForm::LForm(const GaussianRational& c) { add_term(LGen::one(), c); }

LForm::LForm(LGen g, const GaussianRational& c) { add_term(g, c); }

void LForm::add_term(const LGen& g, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LForm::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.kind == LGen::Kind::One);
}

GaussianRational LForm::coeff(const LGen& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? GaussianRational() : it->second;
}

LForm LForm::operator-() const {
  LForm r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

LForm& LForm::operator+=(const LForm& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

LForm& LForm::operator-=(const LForm& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

LForm& LForm::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

LForm operator*(const LForm& a, const LForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_scalar()) return b * a.coeff(LGen::one());
  if (b.is_scalar()) return a * b.coeff(LGen::one());
  throw std::domain_error("product of two non-trivial L-value generators is not representable");
}

LForm lform_imag(const LForm& f) {
  LForm r;
  for (const auto& [g, c] : f.terms()) r += LForm(g, GaussianRational(c.im()));
  return r;
}

LForm lform_real(const LForm& f) {
  LForm r;
  for (const auto& [g, c] : f.terms()) r += LForm(g, GaussianRational(c.re()));
  return r;
}

std::ostream& operator<<(std::ostream& os, const LForm& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [g, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << '*' << g.name();
  }
  return os;
}

}  // namespace eis4
