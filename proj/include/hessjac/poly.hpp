#pragma once

#include <compare>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hessjac/prime_field.hpp"

namespace hessjac {

using Rng = std::mt19937_64;

/// Univariate polynomial over F_p, dense, lowest degree first.
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial is
/// the empty coefficient vector and deg() == -1 for it. Every operation
/// re-canonicalizes its result.
class Poly {
 public:
  Poly() = default;
  explicit Poly(u32 p) : p_(p) {}
  Poly(u32 p, std::vector<u32> coeffs);
  /// Constant polynomial c (reduced mod p).
  static Poly constant(u32 p, i64 c);
  /// c * x^k.
  static Poly monomial(u32 p, u32 c, int k);
  static Poly x(u32 p) { return monomial(p, 1, 1); }
  /// Coefficients given as signed integers, lowest degree first.
  static Poly from_ints(u32 p, std::span<const i64> coeffs);
  static Poly random(u32 p, int deg, Rng& rng, bool monic = false);

  u32 modulus() const { return p_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  u32 lc() const { return c_.empty() ? 0 : c_.back(); }
  u32 operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<u32>& coeffs() const { return c_; }
  /// Lowest index with a nonzero coefficient (the x-adic valuation); -1 for zero.
  int low_deg() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(u32 c) const;
  Poly shift(int k) const;  // multiply by x^k, k >= 0
  /// Drop the k lowest coefficients (exact division by x^k when low_deg() >= k).
  Poly shift_down(int k) const;
  Poly truncate(int n) const;  // mod x^n
  /// x^d * this(1/x) for d >= deg().
  Poly reverse(int d) const;

  /// Division with remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divrem(d).first; }
  Poly operator%(const Poly& d) const { return divrem(d).second; }
  bool divides(const Poly& a) const;  // this | a
  Poly monic() const;
  Poly derivative() const;
  u32 eval(u32 x) const;
  Poly powmod(u64 e, const Poly& m) const;
  Poly pow(u64 e) const;
  /// this(g(x))
  Poly compose(const Poly& g) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  /// Total order: by degree, then coefficients from the top.
  std::strong_ordering operator<=>(const Poly& o) const;

  std::string str(char var = 'x') const;

 private:
  void trim();
  u32 p_ = 0;
  std::vector<u32> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g, s, t;
};
/// g = s*a + t*b, g monic. Throws on (0, 0).
Xgcd xgcd(const Poly& a, const Poly& b);

/// Multiplicity of the irreducible q in a (a nonzero).
int valuation(Poly a, const Poly& q);

/// Inverse of a modulo m; throws if not coprime.
Poly invmod(const Poly& a, const Poly& m);

}  // namespace hessjac
