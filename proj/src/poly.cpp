#include "hessjac/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <cassert>
#include <sstream>

namespace hessjac {

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  u32 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u32 a : {2u, 3u, 5u, 7u}) {
    u32 x = Zp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = Zp::mul(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

void check_modulus(u32 p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p)) {
    throw Error("modulus must be a prime below 2^31: " + std::to_string(p));
  }
}

Poly::Poly(u32 p, std::vector<u32> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::constant(u32 p, i64 c) {
  Poly r(p);
  u32 v = Zp::from_int(c, p);
  if (v) r.c_.push_back(v);
  return r;
}

Poly Poly::monomial(u32 p, u32 c, int k) {
  Poly r(p);
  c %= p;
  if (c == 0) return r;
  r.c_.assign(k + 1, 0);
  r.c_[k] = c;
  return r;
}

Poly Poly::from_ints(u32 p, std::span<const i64> coeffs) {
  Poly r(p);
  r.c_.reserve(coeffs.size());
  for (i64 v : coeffs) r.c_.push_back(Zp::from_int(v, p));
  r.trim();
  return r;
}

Poly Poly::random(u32 p, int deg, Rng& rng, bool monic) {
  Poly r(p);
  if (deg < 0) return r;
  std::uniform_int_distribution<u32> dist(0, p - 1);
  r.c_.resize(deg + 1);
  for (auto& c : r.c_) c = dist(rng);
  if (monic) r.c_[deg] = 1;
  r.trim();
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_deg() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i]) return static_cast<int>(i);
  }
  return -1;
}

Poly Poly::operator+(const Poly& o) const {
  u32 p = p_ ? p_ : o.p_;
  Poly r(p);
  const auto& a = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& b = c_.size() >= o.c_.size() ? o.c_ : c_;
  r.c_ = a;
  for (size_t i = 0; i < b.size(); ++i) r.c_[i] = Zp::add(r.c_[i], b[i], p);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  u32 p = p_ ? p_ : o.p_;
  Poly r(p);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = Zp::sub(r.c_[i], o.c_[i], p);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(p_);
  r.c_.reserve(c_.size());
  for (u32 c : c_) r.c_.push_back(Zp::neg(c, p_));
  return r;
}

namespace {

// Schoolbook product into out[0 .. na+nb-1). For small p a whole convolution
// sum fits in 64 bits; otherwise products are < 2^62 and go through a 128-bit
// accumulator three at a time.
void mul_school(const u32* a, size_t na, const u32* b, size_t nb, u32 p, u32* out) {
  using u128 = unsigned __int128;
  u64 sq = static_cast<u64>(p - 1) * (p - 1);
  bool narrow = sq == 0 || std::min(na, nb) <= UINT64_MAX / sq;
  for (size_t k = 0; k + 1 < na + nb; ++k) {
    size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
    size_t hi = std::min(k, na - 1);
    if (narrow) {
      u64 acc = 0;
      for (size_t i = lo; i <= hi; ++i) acc += static_cast<u64>(a[i]) * b[k - i];
      out[k] = static_cast<u32>(acc % p);
      continue;
    }
    u128 acc = 0;
    u64 part = 0;
    int cnt = 0;
    for (size_t i = lo; i <= hi; ++i) {
      part += static_cast<u64>(a[i]) * b[k - i];
      if (++cnt == 3) {
        acc += part;
        part = 0;
        cnt = 0;
      }
    }
    acc += part;
    out[k] = static_cast<u32>(acc % p);
  }
}

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  u32 p = p_ ? p_ : o.p_;
  Poly r(p);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  mul_school(c_.data(), c_.size(), o.c_.data(), o.c_.size(), p, r.c_.data());
  r.trim();
  return r;
}

Poly Poly::scale(u32 c) const {
  Poly r(p_);
  c %= p_;
  if (c == 0) return r;
  r.c_.reserve(c_.size());
  for (u32 v : c_) r.c_.push_back(Zp::mul(v, c, p_));
  return r;
}

Poly Poly::shift(int k) const {
  assert(k >= 0);
  if (c_.empty() || k == 0) return *this;
  Poly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shift_down(int k) const {
  if (k <= 0) return *this;
  Poly r(p_);
  if (static_cast<int>(c_.size()) > k) r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly Poly::truncate(int n) const {
  if (static_cast<int>(c_.size()) <= n) return *this;
  Poly r(p_);
  if (n > 0) r.c_.assign(c_.begin(), c_.begin() + n);
  r.trim();
  return r;
}

Poly Poly::reverse(int d) const {
  assert(d >= deg());
  Poly r(p_);
  if (c_.empty()) return r;
  r.c_.assign(d + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[d - i] = c_[i];
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  u32 p = p_ ? p_ : d.p_;
  if (deg() < d.deg()) return {Poly(p), *this};
  int dd = d.deg();
  int qd = deg() - dd;
  std::vector<u32> q(qd + 1, 0);
  u32 linv = d.lc() == 1 ? 1 : Zp::inv(d.lc(), p);
  u64 sq = static_cast<u64>(p - 1) * (p - 1);
  if (sq == 0 || static_cast<u64>(std::min(dd, qd) + 1) <= UINT64_MAX / sq) {
    // coefficient-wise: a_k = sum_i q_i d_(k-i), one reduction per coefficient
    const u32* b = d.c_.data();
    for (int i = qd; i >= 0; --i) {
      int k = i + dd;
      u64 acc = 0;
      for (int j = i + 1; j <= std::min(qd, k); ++j) acc += static_cast<u64>(q[j]) * b[k - j];
      u32 c = Zp::sub(c_[k], static_cast<u32>(acc % p), p);
      q[i] = linv == 1 ? c : Zp::mul(c, linv, p);
    }
    std::vector<u32> rem(dd, 0);
    for (int k = 0; k < dd; ++k) {
      u64 acc = 0;
      for (int j = 0; j <= std::min(qd, k); ++j) acc += static_cast<u64>(q[j]) * b[k - j];
      rem[k] = Zp::sub(c_[k], static_cast<u32>(acc % p), p);
    }
    Poly qq(p), rr(p);
    qq.c_ = std::move(q);
    qq.trim();
    rr.c_ = std::move(rem);
    rr.trim();
    return {std::move(qq), std::move(rr)};
  }
  std::vector<u32> rem = c_;
  for (int i = qd; i >= 0; --i) {
    u32 c = rem[i + dd];
    if (c == 0) continue;
    if (linv != 1) c = Zp::mul(c, linv, p);
    q[i] = c;
    u32 nc = Zp::neg(c, p);
    for (int j = 0; j < dd; ++j) {
      if (d.c_[j]) rem[i + j] = static_cast<u32>((rem[i + j] + static_cast<u64>(nc) * d.c_[j]) % p);
    }
    rem[i + dd] = 0;
  }
  Poly qq(p), rr(p);
  qq.c_ = std::move(q);
  qq.trim();
  rem.resize(dd);
  rr.c_ = std::move(rem);
  rr.trim();
  return {std::move(qq), std::move(rr)};
}

bool Poly::divides(const Poly& a) const {
  if (is_zero()) return a.is_zero();
  return (a % *this).is_zero();
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scale(Zp::inv(c_.back(), p_));
}

Poly Poly::derivative() const {
  Poly r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Zp::mul(c_[i], static_cast<u32>(i % p_), p_);
  r.trim();
  return r;
}

u32 Poly::eval(u32 x) const {
  u64 acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % p_;
  return static_cast<u32>(acc);
}

Poly Poly::powmod(u64 e, const Poly& m) const {
  Poly result = Poly::constant(m.modulus(), 1) % m;
  Poly base = *this % m;
  while (e) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

Poly Poly::pow(u64 e) const {
  Poly result = Poly::constant(p_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::compose(const Poly& g) const {
  Poly r(p_);
  for (size_t i = c_.size(); i-- > 0;) r = r * g + Poly::constant(p_, c_[i]);
  return r;
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  }
  return std::strong_ordering::equal;
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error("xgcd of zero pair");
  u32 p = a.modulus() ? a.modulus() : b.modulus();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(p, 1), s1(p);
  Poly t0(p), t1 = Poly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u32 inv = Zp::inv(r0.lc(), p);
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

int valuation(Poly a, const Poly& q) {
  if (a.is_zero()) throw Error("valuation of zero polynomial");
  int v = 0;
  while (true) {
    auto [qq, r] = a.divrem(q);
    if (!r.is_zero()) return v;
    a = std::move(qq);
    ++v;
  }
}

Poly invmod(const Poly& a, const Poly& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (!g.is_one()) throw Error("polynomial not invertible modulo m");
  return s % m;
}

}  // namespace hessjac
