#pragma once

#include <initializer_list>
#include <vector>

#include "hessjac/function_field.hpp"
#include "hessjac/poly.hpp"

namespace testing {

using namespace hessjac;

inline Poly P(u32 p, std::initializer_list<i64> c) {
  std::vector<i64> v(c);
  return Poly::from_ints(p, v);
}

/// Field t^n + a_{n-1} t^{n-1} + ... + a_0 with coefficient lists lowest-first.
inline FieldPtr field(u32 p, std::initializer_list<std::initializer_list<i64>> coeffs) {
  std::vector<Poly> a;
  for (auto c : coeffs) a.push_back(P(p, c));
  return FunctionField::make(p, std::move(a));
}

// Frequently used small fields.
inline FieldPtr hyperelliptic_7() { return field(7, {{-1, 0, 0, 0, 0, -1}, {}}); }      // y^2 = x^5 + 1
inline FieldPtr elliptic_5() { return field(5, {{0, -1, 0, -1}, {}}); }                 // y^2 = x^3 + x
inline FieldPtr artin_schreier_2() { return field(2, {{0, 0, 0, 1}, {1}}); }            // y^2 + y = x^3

}  // namespace testing

#include "hessjac/divisor.hpp"
#include "hessjac/poly_factor.hpp"

namespace testing {

/// Places above the infinite prime and above a few finite primes of degree 1 and 2.
inline std::vector<PlacePtr> place_pool(const FieldPtr& f, size_t primes_per_degree = 4) {
  std::vector<PlacePtr> pool = f->infinite_places();
  u32 p = f->p();
  Rng rng(p);
  for (int d = 1; d <= 2; ++d) {
    std::vector<Poly> qs;
    if (p < 50) {
      qs = monic_irreducibles(p, d);
    } else {
      while (qs.size() < primes_per_degree) {
        Poly q = Poly::random(p, d, rng, true);
        if (is_irreducible(q)) qs.push_back(q);
      }
    }
    if (qs.size() > primes_per_degree) qs.resize(primes_per_degree);
    for (const auto& q : qs)
      for (const auto& pl : f->places_above(q)) pool.push_back(pl);
  }
  return pool;
}

/// Random divisor with at most `terms` terms and coefficients in [-c, c].
inline Divisor random_divisor(const FieldPtr& f, const std::vector<PlacePtr>& pool, Rng& rng, int terms, int c) {
  Divisor d(f);
  int k = static_cast<int>(rng() % (terms + 1));
  for (int i = 0; i < k; ++i) {
    const auto& pl = pool[rng() % pool.size()];
    d.add_term(pl, static_cast<int>(rng() % (2 * c + 1)) - c);
  }
  return d;
}

}  // namespace testing
