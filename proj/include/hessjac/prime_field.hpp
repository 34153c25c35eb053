#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hessjac {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Library-wide error type. Messages are stable and part of the interface.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic primality test for 32-bit moduli.
bool is_prime_u32(u32 n);

/// Arithmetic helpers for the prime field F_p, 2 <= p < 2^31.
struct Zp {
  static u32 add(u32 a, u32 b, u32 p) {
    u32 s = a + b;
    return s >= p ? s - p : s;
  }
  static u32 sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
  static u32 neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
  static u32 mul(u32 a, u32 b, u32 p) { return static_cast<u32>(static_cast<u64>(a) * b % p); }
  static u32 pow(u32 a, u64 e, u32 p) {
    u64 r = 1 % p, b = a % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<u32>(r);
  }
  static u32 inv(u32 a, u32 p) {
    if (a % p == 0) throw Error("inverse of zero in F_p");
    // extended Euclid; faster than Fermat for one-off inverses
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      i64 q = r / nr;
      i64 tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<u32>(t);
  }
  /// Reduce a signed integer into [0, p).
  static u32 from_int(i64 v, u32 p) {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += p;
    return static_cast<u32>(r);
  }
};

/// An element of F_p carrying its modulus.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(i64 v, u32 p) : value_(Zp::from_int(v, p)), p_(p) {}

  u32 value() const { return value_; }
  u32 modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return raw(Zp::add(value_, o.value_, p_)); }
  FieldElem operator-(const FieldElem& o) const { return raw(Zp::sub(value_, o.value_, p_)); }
  FieldElem operator*(const FieldElem& o) const { return raw(Zp::mul(value_, o.value_, p_)); }
  FieldElem operator-() const { return raw(Zp::neg(value_, p_)); }
  FieldElem inverse() const { return raw(Zp::inv(value_, p_)); }
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
  bool operator==(const FieldElem& o) const = default;

 private:
  FieldElem raw(u32 v) const {
    FieldElem r;
    r.value_ = v;
    r.p_ = p_;
    return r;
  }
  u32 value_ = 0;
  u32 p_ = 0;
};

/// Throws unless p is a prime below 2^31.
void check_modulus(u32 p);

}  // namespace hessjac
