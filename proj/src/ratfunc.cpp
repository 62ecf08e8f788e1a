#include "hvir/ratfunc.hpp"

#include <stdexcept>

namespace hvir {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rational lead = den_.leading();
  num_ /= lead;
  den_ /= lead;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at " + at.to_string());
  return num_.eval(at) / d;
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
  auto horner = [&inner](const Poly& p) {
    RatFunc acc;
    for (int d = p.degree(); d >= 0; --d) acc = acc * inner + RatFunc(p.coeff(d));
    return acc;
  };
  return horner(num_) / horner(den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc pow(const RatFunc& base, int exponent) {
  if (exponent < 0) return RatFunc(1) / pow(base, -exponent);
  RatFunc r(1);
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}

}  // namespace hvir
