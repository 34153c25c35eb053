#pragma once

#include <string>

#include "hessjac/order.hpp"
#include "hessjac/ratfunc.hpp"

namespace hessjac {

/// Fractional ideal of a maximal order, stored as hnf() / denom() in
/// omega-coordinates of the order.
///
/// Canonical form: hnf() is the lower-triangular Hermite form (see
/// PolyMatrix) and gcd(content(hnf()), denom()) = 1, so equal ideals have
/// identical representations and key() doubles as a cache key. For orders
/// with a local prime the ideal is localized there: diagonal entries and the
/// denominator are powers of that prime.
class FractionalIdeal {
 public:
  FractionalIdeal() = default;

  /// Ideal whose lattice is spanned by the columns of gens / den.
  /// `det_multiple` must be a nonzero multiple of the determinant of the
  /// lattice spanned by the columns of gens.
  static FractionalIdeal from_lattice(OrderPtr order, PolyMatrix gens, Poly den, const Poly& det_multiple);
  static FractionalIdeal unit(OrderPtr order);
  /// a * O for a given in omega-coordinates; a != 0.
  static FractionalIdeal principal(OrderPtr order, const PolyVec& a);

  const Order& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }
  Side side() const { return order_->side(); }
  const PolyMatrix& hnf() const { return h_; }
  const Poly& denom() const { return den_; }
  bool valid() const { return order_ != nullptr; }

  bool is_integral() const { return den_.is_one(); }
  bool is_unit() const;
  /// Product of the diagonal of hnf().
  Poly hnf_det() const;
  /// det(hnf()) / denom()^n.
  RatFunc norm() const;
  /// deg of the norm, i.e. deg hnf_det - n deg denom.
  int norm_degree() const;

  /// Product of ideals of the same order; throws "ideal side mismatch".
  FractionalIdeal operator*(const FractionalIdeal& o) const;
  /// a * I for an element a in omega-coordinates.
  FractionalIdeal mul_element(const PolyVec& a) const;
  FractionalIdeal inverse() const;
  FractionalIdeal pow(int k) const;
  bool contains(const PolyVec& a) const;

  bool operator==(const FractionalIdeal& o) const {
    return order_ == o.order_ && den_ == o.den_ && h_ == o.h_;
  }
  /// Canonical byte string of (hnf, denom).
  std::string key() const;
  std::string str() const;

 private:
  OrderPtr order_;
  PolyMatrix h_;
  Poly den_;
};

/// Append a length-prefixed binary encoding of p to out.
void append_poly_bytes(std::string& out, const Poly& p);

}  // namespace hessjac
