#pragma once

#include <map>
#include <string>
#include <utility>

#include "hessjac/function_field.hpp"

namespace hessjac {

/// Formal sum of places with nonzero integer coefficients.
class Divisor {
 public:
  using Terms = std::map<PlacePtr, int, PlacePtrLess>;

  Divisor() = default;
  explicit Divisor(FieldPtr field) : field_(std::move(field)) {}
  static Divisor of_place(FieldPtr field, PlacePtr place, int k = 1);

  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  int coefficient(const PlacePtr& place) const;
  int degree() const { return degree_; }
  /// sum |v_P(D)| deg P.
  int height() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;

  void add_term(const PlacePtr& place, int k);
  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;
  Divisor scaled(int k) const;
  bool operator==(const Divisor& o) const;

  /// (finite part, infinite part).
  std::pair<Divisor, Divisor> decompose() const;

  /// "3*F:1,1:0 - I:0"; "0" for the zero divisor.
  std::string str() const;
  /// [{"place": key, "coefficient": k}, ...]
  std::string to_json() const;
  static Divisor from_json(FieldPtr field, const std::string& text);

 private:
  void check_field(const Divisor& o) const;

  FieldPtr field_;
  Terms terms_;
  int degree_ = 0;
};

/// Fractional ideals I of the finite and J of the infinite maximal order with
/// v_P(I) = v_P(D) at finite and v_P(J) = v_P(D) at infinite places.
struct IdealPair {
  FractionalIdeal finite, infinite;
};

IdealPair to_ideal_pair(const Divisor& d);
Divisor from_ideal_pair(const FieldPtr& field, const IdealPair& pair);

/// Valuation of a nonzero element at a place.
int valuation(const FunctionField& field, const Place& place, const FFElem& a);

/// div(a); throws "principal divisor of zero".
Divisor principal_divisor(const FieldPtr& field, const FFElem& a);

enum class PlacePreference { Infinite, Any };

/// Degree-one place with the smallest key, looking at infinite places first
/// when preferred, then above the primes x - c for c < max_finite_primes.
/// Throws "no degree-one place found".
PlacePtr find_degree_one_place(const FieldPtr& field, PlacePreference prefer = PlacePreference::Infinite,
                               u32 max_finite_primes = 1u << 16);

}  // namespace hessjac
