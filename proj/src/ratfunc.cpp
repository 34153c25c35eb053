#include "hessjac/ratfunc.hpp"

namespace hessjac {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.modulus(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  u32 p = den.modulus();
  if (num.is_zero()) {
    num_ = Poly(p);
    den_ = Poly::constant(p, 1);
    return;
  }
  Poly g = gcd(num, den);
  num = num / g;
  den = den / g;
  u32 inv = Zp::inv(den.lc(), p);
  num_ = num.scale(inv);
  den_ = den.scale(inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("division by zero rational function");
  return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hessjac
