#include "eis4/gaussian.hpp"

#include <stdexcept>

namespace eis4 {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << '(' << to_string(z.re()) << ")+(" << to_string(z.im()) << ")i";
}

}  // namespace eis4
