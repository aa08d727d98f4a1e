#include "eis4/qseries.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace eis4 {

int default_truncation() {
  const char* env = std::getenv("EIS4_TERMS");
  if (env == nullptr) return 40;
  int n = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, n);
  if (ec != std::errc() || ptr != end || n < 1) return 40;
  return n;
}

LSeries lift(const GSeries& a) {
  LSeries r(a.truncation());
  for (int n = 1; n <= a.truncation(); ++n) r[n] = LForm(a[n]);
  const auto& c = a.constant();
  if (auto* e = std::get_if<ConstExact<GaussianRational>>(&c)) {
    r.set_exact_constant(LForm(e->value));
  } else if (auto* t = std::get_if<ConstOpaqueT>(&c)) {
    r.set_constant(*t);
  } else if (auto* t2 = std::get_if<ConstOpaqueT2>(&c)) {
    r.set_constant(*t2);
  } else if (auto* p = std::get_if<ConstOpaqueProduct<GaussianRational>>(&c)) {
    r.set_constant(ConstOpaqueProduct<LForm>{LForm(p->left), LForm(p->right)});
  }
  return r;
}

}  // namespace eis4
