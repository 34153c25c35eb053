#pragma once

#include <string>

#include "hessjac/poly.hpp"

namespace hessjac {

/// Element of K(x) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// deg(num) - deg(den); the negated valuation at infinity. Zero has -1 - deg(den) which
  /// callers never rely on.
  int degree() const { return num_.deg() - den_.deg(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;

 private:
  RatFunc(Poly num, Poly den, bool /*already_reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_, den_;
};

}  // namespace hessjac
