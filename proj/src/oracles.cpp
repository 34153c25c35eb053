#include "hessjac/oracles.hpp"

#include "hessjac/poly_factor.hpp"

namespace hessjac {

HrMinResult brute_hr_min(JacobianCtx& ctx, const Divisor& d) {
  if (d.degree() != 0) throw Error("divisor degree must be zero");
  const auto& a = ctx.base_place();
  for (int m = 0; m <= ctx.genus(); ++m) {
    auto rr = rr_basis(d + Divisor::of_place(ctx.field(), a, m));
    if (rr.dim() == 0) continue;
    if (rr.dim() != 1) throw Error("library bug: first nonzero Riemann-Roch space is not a line");
    return {m, rr.basis[0].normalized()};
  }
  throw Error("library bug: no m <= g with l(D + mA) > 0");
}

namespace {

u64 checked_power(u32 p, int m) {
  u64 q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 16)) throw Error("enumeration guard exceeded: p^m > 2^16");
  }
  return q;
}

}  // namespace

i64 count_degree_one_places(const FunctionField& field, int m) {
  if (m < 1) throw Error("extension degree must be positive");
  checked_power(field.p(), m);
  i64 count = 0;
  for (const auto& pl : field.infinite_places())
    if (m % pl->degree() == 0) count += pl->degree();
  for (int e = 1; e <= m; ++e) {
    if (m % e) continue;
    for (const auto& q : monic_irreducibles(field.p(), e))
      for (const auto& pl : field.places_above(q))
        if (m % pl->degree() == 0) count += pl->degree();
  }
  return count;
}

std::vector<i64> l_polynomial(const FunctionField& field) {
  int g = field.genus();
  if (g > 3) throw Error("enumeration guard exceeded: genus > 3");
  i64 q = field.p();
  checked_power(field.p(), std::max(g, 1));
  std::vector<i64> s(g + 1, 0), a(2 * g + 1, 0);
  i64 qm = 1;
  for (int m = 1; m <= g; ++m) {
    qm *= q;
    s[m] = count_degree_one_places(field, m) - (qm + 1);
  }
  a[0] = 1;
  for (int i = 1; i <= g; ++i) {
    i64 acc = 0;
    for (int j = 1; j <= i; ++j) acc += s[j] * a[i - j];
    if (acc % i) throw Error("library bug: Newton identity not integral");
    a[i] = acc / i;
  }
  for (int i = g + 1; i <= 2 * g; ++i) {
    i64 qp = 1;
    for (int k = 0; k < i - g; ++k) qp *= q;
    a[i] = qp * a[2 * g - i];
  }
  return a;
}

i64 jacobian_order(const FunctionField& field) {
  i64 h = 0;
  for (i64 c : l_polynomial(field)) h += c;
  return h;
}

}  // namespace hessjac
