#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hessjac/ideal.hpp"

namespace hessjac {

/// A place of F: a prime ideal of the finite or infinite maximal order.
///
/// Places above the same base prime are numbered by the order of their ideal
/// keys, so (side, prime, index) is a canonical, run-independent identifier.
class Place {
 public:
  Side side() const { return ideal_.side(); }
  /// Base prime: monic irreducible in x (finite) or u = 1/x (infinite).
  const Poly& prime() const { return prime_; }
  int index() const { return index_; }
  int ramification() const { return e_; }
  /// Residue degree over the base prime.
  int inertia() const { return f_; }
  /// Degree over the constant field: inertia() * deg(prime()).
  int degree() const { return f_ * prime_.deg(); }
  const FractionalIdeal& ideal() const { return ideal_; }
  const FractionalIdeal& inverse() const { return inverse_; }
  /// "F:c0,c1,...:i" or "I:i".
  const std::string& key() const { return key_; }

  /// Valuation of a nonzero element given in omega-coordinates of the order.
  int valuation(const PolyVec& a) const;
  /// Exponent of this place in a fractional ideal of the same order.
  int valuation(const FractionalIdeal& ideal) const;

  /// Canonical ordering: side, then base prime, then index.
  bool operator<(const Place& o) const;
  bool operator==(const Place& o) const { return key_ == o.key_; }

 private:
  friend std::vector<std::shared_ptr<const Place>> decompose(const OrderPtr& order, const Poly& prime);
  int strip(std::vector<Poly>& cols, int ncols) const;

  Poly prime_;
  int index_ = 0, e_ = 1, f_ = 1;
  FractionalIdeal ideal_, inverse_;
  std::vector<Poly> beta_;  // beta_ / prime_ lies in inverse() but not in the order
  std::string key_;
};

using PlacePtr = std::shared_ptr<const Place>;

/// All places of `order` above the irreducible `prime`, in canonical order.
/// Throws when prime is not irreducible. Verifies sum e_i f_i = n.
std::vector<PlacePtr> decompose(const OrderPtr& order, const Poly& prime);

struct PlacePtrLess {
  bool operator()(const PlacePtr& a, const PlacePtr& b) const { return *a < *b; }
};

}  // namespace hessjac
