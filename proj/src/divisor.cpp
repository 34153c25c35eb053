#include "hessjac/divisor.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "hessjac/poly_factor.hpp"

namespace hessjac {

Divisor Divisor::of_place(FieldPtr field, PlacePtr place, int k) {
  Divisor d(std::move(field));
  d.add_term(place, k);
  return d;
}

int Divisor::coefficient(const PlacePtr& place) const {
  auto it = terms_.find(place);
  return it == terms_.end() ? 0 : it->second;
}

int Divisor::height() const {
  int h = 0;
  for (const auto& [pl, k] : terms_) h += std::abs(k) * pl->degree();
  return h;
}

bool Divisor::is_effective() const {
  for (const auto& [pl, k] : terms_)
    if (k < 0) return false;
  return true;
}

void Divisor::add_term(const PlacePtr& place, int k) {
  if (k == 0) return;
  degree_ += k * place->degree();
  auto [it, inserted] = terms_.emplace(place, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

void Divisor::check_field(const Divisor& o) const {
  if (field_ && o.field_ && field_ != o.field_) throw Error("divisor field mismatch");
}

Divisor Divisor::operator+(const Divisor& o) const {
  check_field(o);
  Divisor r = *this;
  if (!r.field_) r.field_ = o.field_;
  for (const auto& [pl, k] : o.terms_) r.add_term(pl, k);
  return r;
}

Divisor Divisor::operator-() const { return scaled(-1); }

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::scaled(int k) const {
  Divisor r(field_);
  if (k == 0) return r;
  for (const auto& [pl, c] : terms_) r.terms_.emplace(pl, c * k);
  r.degree_ = degree_ * k;
  return r;
}

bool Divisor::operator==(const Divisor& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first->key() != b->first->key() || a->second != b->second) return false;
  return true;
}

std::pair<Divisor, Divisor> Divisor::decompose() const {
  Divisor fin(field_), inf(field_);
  for (const auto& [pl, k] : terms_) (pl->side() == Side::Finite ? fin : inf).add_term(pl, k);
  return {fin, inf};
}

std::string Divisor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pl, k] : terms_) {
    int a = std::abs(k);
    if (first) {
      if (k < 0) os << "-";
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << a << "*";
    os << pl->key();
  }
  return os.str();
}

std::string Divisor::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [pl, k] : terms_) arr.push_back({{"place", pl->key()}, {"coefficient", k}});
  return arr.dump();
}

Divisor Divisor::from_json(FieldPtr field, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid divisor: ") + e.what());
  }
  if (!j.is_array()) throw Error("invalid divisor: expected a list");
  Divisor d(field);
  for (const auto& t : j) d.add_term(field->place_by_key(t.at("place").get<std::string>()), t.at("coefficient").get<int>());
  return d;
}

IdealPair to_ideal_pair(const Divisor& d) {
  const FunctionField& f = *d.field();
  IdealPair r{FractionalIdeal::unit(f.finite_order()), FractionalIdeal::unit(f.infinite_order())};
  for (const auto& [pl, k] : d.terms()) {
    FractionalIdeal pk = k > 0 ? pl->ideal().pow(k) : pl->inverse().pow(-k);
    if (pl->side() == Side::Finite) {
      r.finite = r.finite * pk;
    } else {
      r.infinite = r.infinite * pk;
    }
  }
  return r;
}

Divisor from_ideal_pair(const FieldPtr& field, const IdealPair& pair) {
  Divisor d(field);
  const auto& fin = pair.finite;
  Poly support = fin.hnf_det() * fin.denom();
  if (support.deg() > 0) {
    for (const auto& [q, m] : factor(support))
      for (const auto& pl : field->places_above(q)) d.add_term(pl, pl->valuation(fin));
  }
  for (const auto& pl : field->infinite_places()) d.add_term(pl, pl->valuation(pair.infinite));
  return d;
}

int valuation(const FunctionField& field, const Place& place, const FFElem& a) {
  return place.valuation(field.to_order(place.side(), a));
}

Divisor principal_divisor(const FieldPtr& field, const FFElem& a) {
  if (a.is_zero()) throw Error("principal divisor of zero");
  Divisor d(field);
  PolyVec c = field->to_order(Side::Finite, a);
  Poly support = det(field->finite_order()->mult_matrix(c.num)) * c.den;
  if (support.deg() > 0) {
    for (const auto& [q, m] : factor(support))
      for (const auto& pl : field->places_above(q)) d.add_term(pl, pl->valuation(c));
  }
  PolyVec ci = field->to_order(Side::Infinite, a);
  for (const auto& pl : field->infinite_places()) d.add_term(pl, pl->valuation(ci));
  return d;
}

PlacePtr find_degree_one_place(const FieldPtr& field, PlacePreference prefer, u32 max_finite_primes) {
  if (prefer == PlacePreference::Infinite) {
    for (const auto& pl : field->infinite_places())
      if (pl->degree() == 1) return pl;
  }
  u32 p = field->p();
  u32 limit = std::min<u32>(p, max_finite_primes);
  for (u32 c = 0; c < limit; ++c) {
    Poly q = Poly::x(p) - Poly::constant(p, c);
    for (const auto& pl : field->places_above(q))
      if (pl->degree() == 1) return pl;
  }
  if (prefer == PlacePreference::Any) {
    for (const auto& pl : field->infinite_places())
      if (pl->degree() == 1) return pl;
  }
  throw Error("no degree-one place found");
}

}  // namespace hessjac
