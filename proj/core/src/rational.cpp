#include "tdcalc/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tdcalc {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational n = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  return *this;
}

GaussianRational pow(const GaussianRational& z, long e) {
  if (e < 0) return GaussianRational(1) / pow(z, -e);
  GaussianRational acc(1), base = z;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  auto rat = [](const Rational& q) {
    std::ostringstream s;
    s << q;
    return s.str();
  };
  if (im_ == 0) return rat(re_);
  std::string im_part;
  if (im_ == 1)
    im_part = "i";
  else if (im_ == -1)
    im_part = "-i";
  else
    im_part = rat(im_) + "*i";
  if (re_ == 0) return im_part;
  if (im_ > 0) return rat(re_) + "+" + im_part;
  return rat(re_) + im_part;  // im_part already carries the minus
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.str();
}

}  // namespace tdcalc
