#include "hessjac/riemann_roch.hpp"

namespace hessjac {

namespace {

// For the infinite ideal J with basis C (columns, in y-power coordinates over
// F_p(x)), computes `left` and `shift` such that
//   C^{-1} * M0 * H / (d0 * dH)  ~  x^(shift - deg d0 - deg dH) * left * H
// for every finite lattice M0 * H / (d0 * dH), up to a nonzero constant.
SsrrCache::Entry infinite_transform(const FunctionField& f, const FractionalIdeal& inf) {
  const Order& io = *f.infinite_order();
  const Order& fo = *f.finite_order();
  int n = f.n();
  u32 p = f.p();
  // basis of J in y' = y / x^cf coordinates: P(u) / den(u), u = 1/x
  PolyMatrix pu = io.basis() * inf.hnf();
  Poly den = io.denom() * inf.denom();
  int s = pu.max_deg();
  // P(1/x) = x^-s * px(x), den(1/x) = x^-e * dx(x)
  PolyMatrix px(n, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!pu(i, j).is_zero()) px(i, j) = pu(i, j).reverse(s);
  int e = den.deg();
  Poly dx = den.reverse(e);
  auto si = scaled_inverse(px);
  // y^i = x^(i cf) y'^i
  PolyMatrix tm = fo.basis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tm(i, j) = tm(i, j).shift(i * f.cf());
  SsrrCache::Entry out;
  out.left = (si.r * tm).scale(dx);
  out.shift = s - e - si.d.deg();
  return out;
}

struct Lattice {
  PolyMatrix k;     // reduction target
  PolyMatrix comp;  // finite basis numerators, same column operations
  Poly den;
  int shift = 0;
};

Lattice setup(const FunctionField& f, const FractionalIdeal& fin, const SsrrCache::Entry& t) {
  const Order& fo = *f.finite_order();
  Lattice l;
  l.k = t.left * fin.hnf();
  l.comp = fo.basis() * fin.hnf();
  l.den = fo.denom() * fin.denom();
  l.shift = t.shift - fo.denom().deg() - fin.denom().deg();
  return l;
}

FFElem column_element(const Lattice& l, int j, int xpow) {
  std::vector<Poly> v = l.comp.column(j);
  if (xpow)
    for (auto& c : v) c = c.shift(xpow);
  return FFElem(PolyVec{std::move(v), l.den});
}

void check_sides(const FunctionField& f, const FractionalIdeal& fin, const FractionalIdeal& inf) {
  if (fin.order_ptr() != f.finite_order() || inf.order_ptr() != f.infinite_order())
    throw Error("ideal side mismatch");
}

}  // namespace

const SsrrCache::Entry& SsrrCache::lookup(const FunctionField& field, const FractionalIdeal& infinite) {
  std::string key = infinite.key();
  auto it = map_.find(key);
  if (it != map_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  auto entry = infinite_transform(field, infinite);
  if (max_entries_ == 0 || map_.size() < max_entries_) return map_.emplace(std::move(key), std::move(entry)).first->second;
  scratch_ = std::move(entry);
  return scratch_;
}

RRResult rr_basis(const FunctionField& field, const FractionalIdeal& finite, const FractionalIdeal& infinite) {
  check_sides(field, finite, infinite);
  Lattice l = setup(field, finite, infinite_transform(field, infinite));
  auto cr = column_reduce(l.k, &l.comp);
  // a reduced column of shifted degree d contributes x^k * column, 0 <= k <= -d
  RRResult r;
  for (int j = 0; j < field.n(); ++j) {
    int d = cr.degs[j] + l.shift;
    for (int k = 0; k <= -d; ++k) r.basis.push_back(column_element(l, j, k));
  }
  return r;
}

RRResult rr_basis(const Divisor& d) {
  auto pair = to_ideal_pair(-d);
  return rr_basis(*d.field(), pair.finite, pair.infinite);
}

int rr_dimension(const Divisor& d) { return rr_basis(d).dim(); }

std::optional<FFElem> ssrr(const FunctionField& field, const FractionalIdeal& finite, const FractionalIdeal& infinite,
                           SsrrCache* cache) {
  check_sides(field, finite, infinite);
  Lattice l = cache ? setup(field, finite, cache->lookup(field, infinite))
                    : setup(field, finite, infinite_transform(field, infinite));
  auto cr = column_reduce(std::move(l.k), &l.comp, -l.shift);
  if (!cr.stopped) return std::nullopt;
  return column_element(l, *cr.stopped, 0).normalized();
}

std::optional<FFElem> ssrr(const Divisor& d, SsrrCache* cache) {
  auto pair = to_ideal_pair(-d);
  return ssrr(*d.field(), pair.finite, pair.infinite, cache);
}

}  // namespace hessjac
