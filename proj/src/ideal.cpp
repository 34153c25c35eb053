#include "hessjac/ideal.hpp"

#include <cassert>
#include <sstream>

namespace hessjac {

namespace {

Poly local_part(const Poly& a, const Poly& pi) {
  if (a.is_zero()) throw Error("singular lattice basis");
  return pi.pow(valuation(a, pi));
}

}  // namespace

void append_poly_bytes(std::string& out, const Poly& p) {
  auto put = [&](u32 v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  put(static_cast<u32>(p.deg() + 1));
  for (u32 c : p.coeffs()) put(c);
}

FractionalIdeal FractionalIdeal::from_lattice(OrderPtr order, PolyMatrix gens, Poly den, const Poly& det_multiple) {
  if (det_multiple.is_zero()) throw Error("zero ideal");
  FractionalIdeal r;
  Poly dm = det_multiple;
  if (order->local_prime()) {
    const Poly& pi = *order->local_prime();
    dm = local_part(dm, pi);
    den = local_part(den, pi);
  }
  r.h_ = hnf_mod(std::move(gens), dm);
  // strip common content of lattice and denominator
  int n = order->degree();
  Poly g = den.monic();
  for (int i = 0; i < n && !g.is_one(); ++i)
    for (int j = 0; j <= i && !g.is_one(); ++j)
      if (!r.h_(i, j).is_zero()) g = gcd(g, r.h_(i, j));
  if (!g.is_one()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) r.h_(i, j) = r.h_(i, j) / g;
  }
  r.den_ = (den / g).monic();
  r.order_ = std::move(order);
  return r;
}

FractionalIdeal FractionalIdeal::unit(OrderPtr order) {
  FractionalIdeal r;
  int n = order->degree();
  u32 p = order->modulus();
  r.h_ = PolyMatrix::identity(n, p);
  r.den_ = Poly::constant(p, 1);
  r.order_ = std::move(order);
  return r;
}

FractionalIdeal FractionalIdeal::principal(OrderPtr order, const PolyVec& a) {
  if (a.is_zero()) throw Error("zero ideal");
  PolyMatrix m = order->mult_matrix(a.num);
  Poly d = det(m);
  return from_lattice(std::move(order), std::move(m), a.den, d);
}

bool FractionalIdeal::is_unit() const {
  return den_.is_one() && h_ == PolyMatrix::identity(order_->degree(), order_->modulus());
}

Poly FractionalIdeal::hnf_det() const {
  Poly d = Poly::constant(order_->modulus(), 1);
  for (int i = 0; i < order_->degree(); ++i) d *= h_(i, i);
  return d;
}

RatFunc FractionalIdeal::norm() const { return RatFunc(hnf_det(), den_.pow(order_->degree())); }

int FractionalIdeal::norm_degree() const {
  int d = 0;
  for (int i = 0; i < order_->degree(); ++i) d += h_(i, i).deg();
  return d - order_->degree() * den_.deg();
}

FractionalIdeal FractionalIdeal::operator*(const FractionalIdeal& o) const {
  if (order_ != o.order_) throw Error("ideal side mismatch");
  int n = order_->degree();
  u32 p = order_->modulus();
  if (is_unit()) return o;
  if (o.is_unit()) return *this;
  PolyMatrix gens(n, n * n, p);
  for (int i = 0; i < n; ++i) {
    auto a = h_.column(i);
    for (int j = 0; j < n; ++j) {
      auto c = order_->mul(a, o.h_.column(j));
      for (int r = 0; r < n; ++r) gens(r, i * n + j) = std::move(c[r]);
    }
  }
  return from_lattice(order_, std::move(gens), den_ * o.den_, hnf_det() * o.hnf_det());
}

FractionalIdeal FractionalIdeal::mul_element(const PolyVec& a) const {
  if (a.is_zero()) throw Error("zero ideal");
  PolyMatrix m = order_->mult_matrix(a.num);
  Poly d = det(m) * hnf_det();
  return from_lattice(order_, m * h_, a.den * den_, d);
}

FractionalIdeal FractionalIdeal::inverse() const {
  int n = order_->degree();
  u32 p = order_->modulus();
  // a * I subset O  <=>  rows of mult(h_j) pair integrally with coords(a)
  PolyMatrix rows(n, n * n, p);
  Poly dm;
  for (int j = 0; j < n; ++j) {
    PolyMatrix m = order_->mult_matrix(h_.column(j));
    Poly dj = det(m);
    dm = dm.is_zero() ? dj : gcd(dm, dj);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) rows(c, j * n + r) = m(r, c);
  }
  PolyMatrix b = hnf_mod(std::move(rows), dm);
  Poly detb = Poly::constant(p, 1);
  for (int i = 0; i < n; ++i) detb *= b(i, i);
  auto si = scaled_inverse(b.transpose());
  Poly det_r = si.d.pow(n) / detb;
  return from_lattice(order_, si.r.scale(den_), si.d, det_r * den_.pow(n));
}

FractionalIdeal FractionalIdeal::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  FractionalIdeal result = unit(order_);
  FractionalIdeal base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool FractionalIdeal::contains(const PolyVec& a) const {
  int n = order_->degree();
  std::vector<Poly> w(n);
  for (int i = 0; i < n; ++i) {
    auto [q, r] = (a.num[i] * den_).divrem(a.den);
    if (!r.is_zero()) return false;
    w[i] = std::move(q);
  }
  try {
    lower_solve(h_, std::move(w));
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::string FractionalIdeal::key() const {
  std::string out;
  out.push_back(static_cast<char>(order_->side()));
  int n = order_->degree();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) append_poly_bytes(out, h_(i, j));
  append_poly_bytes(out, den_);
  return out;
}

std::string FractionalIdeal::str() const {
  std::ostringstream os;
  os << "(" << (side() == Side::Finite ? "finite" : "infinite") << " ideal, denom " << den_.str() << ")\n" << h_.str();
  return os.str();
}

}  // namespace hessjac
