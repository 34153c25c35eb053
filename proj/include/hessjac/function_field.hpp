#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hessjac/place.hpp"
#include "hessjac/ratfunc.hpp"

namespace hessjac {

/// Element sum_i c_i y^i of F, stored with a common denominator:
/// c_i = num[i] / den.
class FFElem {
 public:
  FFElem() = default;
  explicit FFElem(PolyVec v);
  static FFElem from_coords(const std::vector<RatFunc>& coords);

  const PolyVec& power() const { return v_; }
  int degree() const { return static_cast<int>(v_.num.size()); }
  RatFunc coord(int i) const { return RatFunc(v_.num[i], v_.den); }
  std::vector<RatFunc> coords() const;
  bool is_zero() const { return v_.is_zero(); }
  bool operator==(const FFElem& o) const { return v_ == o.v_; }
  /// Scale so that the first nonzero numerator coordinate is monic.
  FFElem normalized() const;
  std::string str() const;

 private:
  PolyVec v_;
};

class FunctionField;
using FieldPtr = std::shared_ptr<const FunctionField>;

/// max over nonzero a_i of ceil(deg a_i / (n - i)).
int compute_cf(const std::vector<Poly>& coeffs);

/// Irreducibility of t^n + a_{n-1} t^{n-1} + ... + a_0 over F_p(x).
bool is_irreducible(const std::vector<Poly>& coeffs);

/// F = F_p(x)[t] / (t^n + a_{n-1} t^{n-1} + ... + a_0), y the class of t.
///
/// The finite maximal order lives over F_p[x] in the power basis of y; the
/// infinite one over F_p[u], u = 1/x, in the power basis of y' = y / x^cf,
/// localized at u.
class FunctionField : public std::enable_shared_from_this<FunctionField> {
 public:
  /// Throws "degree too small" or "defining polynomial reducible".
  static FieldPtr make(u32 p, std::vector<Poly> coeffs);

  u32 p() const { return p_; }
  int n() const { return n_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  int cf() const { return cf_; }
  /// Coefficients of the defining polynomial of y' over F_p[u].
  const std::vector<Poly>& infinite_coeffs() const { return inf_coeffs_; }

  const OrderPtr& finite_order() const { return fin_; }
  const OrderPtr& infinite_order() const { return inf_; }
  const OrderPtr& order(Side s) const { return s == Side::Finite ? fin_ : inf_; }
  const std::vector<PlacePtr>& infinite_places() const { return inf_places_; }
  /// Places above a monic irreducible finite prime (memoized).
  const std::vector<PlacePtr>& places_above(const Poly& prime) const;
  /// Finds a place by key among infinite places and memoized finite ones,
  /// decomposing the base prime encoded in a finite key if needed.
  PlacePtr place_by_key(const std::string& key) const;

  /// floor((cf n - 2)(n - 1) / 2).
  int genus_bound() const;
  /// Computed once via the dimension of a large multiple of a place.
  int genus() const;

  FFElem zero() const;
  FFElem one() const;
  FFElem constant(u32 c) const;
  FFElem from_ratfunc(const RatFunc& r) const;
  FFElem gen_x() const;
  FFElem gen_y() const;
  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  /// Throws "inverse of zero element".
  FFElem inv(const FFElem& a) const;
  RatFunc norm(const FFElem& a) const;
  /// Element with polynomial coordinates of degree <= deg.
  FFElem random_element(Rng& rng, int deg) const;

  /// omega-coordinates in the finite / infinite maximal order and back.
  PolyVec to_order(Side s, const FFElem& a) const;
  FFElem from_order(Side s, const PolyVec& c) const;

  std::string defpoly_str() const;

  /// {"p": .., "n": .., "coeffs": [[..], ..]} plus an optional "metadata" object.
  std::string to_json(const std::string& metadata_json = "") const;
  static FieldPtr from_json(const std::string& text);
  static FieldPtr load(const std::string& path);
  void save(const std::string& path, const std::string& metadata_json = "") const;

 private:
  FunctionField() = default;

  u32 p_ = 0;
  int n_ = 0, cf_ = 0;
  std::vector<Poly> coeffs_, inf_coeffs_;
  OrderPtr fin_, inf_;
  std::vector<PlacePtr> inf_places_;
  mutable std::mutex mu_;
  mutable std::map<Poly, std::vector<PlacePtr>> finite_places_;
  mutable std::optional<int> genus_;
};

}  // namespace hessjac
