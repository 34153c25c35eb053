#include "hessjac/order.hpp"

#include <cassert>

#include "hessjac/poly_factor.hpp"

namespace hessjac {

PolyVec PolyVec::integral(std::vector<Poly> num) {
  u32 p = 0;
  for (const auto& c : num) p = p ? p : c.modulus();
  return {std::move(num), Poly::constant(p, 1)};
}

void PolyVec::normalize() {
  u32 p = den.modulus();
  if (den.is_zero()) throw Error("vector with zero denominator");
  if (is_zero()) {
    den = Poly::constant(p, 1);
    return;
  }
  Poly g = den;
  for (const auto& c : num) {
    if (g.is_one()) break;
    if (!c.is_zero()) g = gcd(g, c);
  }
  g = g.scale(den.lc());  // make den / g monic
  if (!(g.deg() == 0 && g[0] == 1)) {
    for (auto& c : num) c = c / g;
    den = den / g;
  }
}

bool PolyVec::is_zero() const {
  for (const auto& c : num)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Poly> power_basis_mul(const std::vector<Poly>& a, const std::vector<Poly>& b,
                                  const std::vector<Poly>& defpoly) {
  int n = static_cast<int>(defpoly.size());
  u32 p = defpoly[0].modulus();
  std::vector<Poly> r(2 * n - 1, Poly(p));
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  for (int k = 2 * n - 2; k >= n; --k) {
    if (r[k].is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      if (!defpoly[i].is_zero()) r[k - n + i] -= r[k] * defpoly[i];
    }
  }
  r.resize(n);
  return r;
}

std::vector<Poly> power_traces(const std::vector<Poly>& defpoly, int count) {
  int n = static_cast<int>(defpoly.size());
  u32 p = defpoly[0].modulus();
  // coefficient of t^(n-i) is defpoly[n-i]
  auto coef = [&](int i) -> const Poly& { return defpoly[n - i]; };
  std::vector<Poly> s(count, Poly(p));
  if (count > 0) s[0] = Poly::constant(p, n);
  for (int k = 1; k < count; ++k) {
    Poly acc(p);
    if (k <= n) acc += coef(k).scale(static_cast<u32>(k % p));
    for (int i = 1; i <= std::min(k - 1, n); ++i) acc += coef(i) * s[k - i];
    s[k] = -acc;
  }
  return s;
}

Poly defpoly_discriminant(const std::vector<Poly>& defpoly) {
  int n = static_cast<int>(defpoly.size());
  u32 p = defpoly[0].modulus();
  auto s = power_traces(defpoly, 2 * n - 1);
  PolyMatrix t(n, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = s[i + j];
  return det(t);
}

Order::Order(u32 p, std::vector<Poly> defpoly, Side side, std::optional<Poly> local_prime)
    : p_(p),
      n_(static_cast<int>(defpoly.size())),
      side_(side),
      local_(std::move(local_prime)),
      defpoly_(std::move(defpoly)),
      basis_(PolyMatrix::identity(n_, p)),
      denom_(Poly::constant(p, 1)) {
  build_tables();
}

Order::Order(const Order& presentation, PolyMatrix basis, Poly denom)
    : p_(presentation.p_),
      n_(presentation.n_),
      side_(presentation.side_),
      local_(presentation.local_),
      defpoly_(presentation.defpoly_),
      basis_(std::move(basis)),
      denom_(std::move(denom)) {
  build_tables();
}

void Order::build_tables() {
  auto si = scaled_inverse(basis_);
  inv_ = std::move(si.r);
  inv_den_ = std::move(si.d);
  Poly scale = inv_den_ * denom_;
  table_.assign(static_cast<size_t>(n_) * n_, {});
  for (int i = 0; i < n_; ++i) {
    auto wi = basis_.column(i);
    for (int j = i; j < n_; ++j) {
      auto prod = power_basis_mul(wi, basis_.column(j), defpoly_);
      std::vector<Poly> c(n_, Poly(p_));
      for (int r = 0; r < n_; ++r) {
        Poly acc(p_);
        for (int k = 0; k < n_; ++k)
          if (!inv_(r, k).is_zero() && !prod[k].is_zero()) acc += inv_(r, k) * prod[k];
        auto [q, rem] = acc.divrem(scale);
        if (!rem.is_zero()) throw Error("order basis is not multiplicatively closed");
        c[r] = std::move(q);
      }
      table_[i * n_ + j] = c;
      table_[j * n_ + i] = std::move(c);
    }
  }
  auto s = power_traces(defpoly_, n_);
  traces_.assign(n_, Poly(p_));
  for (int j = 0; j < n_; ++j) {
    Poly acc(p_);
    for (int l = 0; l < n_; ++l)
      if (!basis_(l, j).is_zero()) acc += basis_(l, j) * s[l];
    traces_[j] = acc / denom_;
  }
}

std::vector<Poly> Order::one() const {
  std::vector<Poly> e(n_, Poly(p_));
  e[0] = Poly::constant(p_, 1);
  auto c = to_coords(PolyVec::integral(e));
  assert(c.den.is_one());
  return c.num;
}

std::vector<Poly> Order::mul(const std::vector<Poly>& a, const std::vector<Poly>& b) const {
  std::vector<Poly> r(n_, Poly(p_));
  for (int i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Poly ab = a[i] * b[j];
      const auto& t = table_[i * n_ + j];
      for (int k = 0; k < n_; ++k)
        if (!t[k].is_zero()) r[k] += ab * t[k];
    }
  }
  return r;
}

PolyVec Order::mul(const PolyVec& a, const PolyVec& b) const {
  PolyVec r{mul(a.num, b.num), a.den * b.den};
  r.normalize();
  return r;
}

PolyMatrix Order::mult_matrix(const std::vector<Poly>& a) const {
  PolyMatrix m(n_, n_, p_);
  for (int i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      const auto& t = table_[i * n_ + j];
      for (int k = 0; k < n_; ++k)
        if (!t[k].is_zero()) m(k, j) += a[i] * t[k];
    }
  }
  return m;
}

PolyVec Order::to_coords(const PolyVec& power) const {
  PolyVec r;
  r.num.assign(n_, Poly(p_));
  for (int i = 0; i < n_; ++i) {
    Poly acc(p_);
    for (int k = 0; k < n_; ++k)
      if (!inv_(i, k).is_zero() && !power.num[k].is_zero()) acc += inv_(i, k) * power.num[k];
    r.num[i] = acc * denom_;
  }
  r.den = inv_den_ * power.den;
  r.normalize();
  return r;
}

PolyVec Order::from_coords(const PolyVec& coords) const {
  PolyVec r;
  r.num.assign(n_, Poly(p_));
  for (int i = 0; i < n_; ++i) {
    Poly acc(p_);
    for (int k = 0; k < n_; ++k)
      if (!basis_(i, k).is_zero() && !coords.num[k].is_zero()) acc += basis_(i, k) * coords.num[k];
    r.num[i] = std::move(acc);
  }
  r.den = denom_ * coords.den;
  r.normalize();
  return r;
}

Poly Order::discriminant() const {
  PolyMatrix t(n_, n_, p_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Poly acc(p_);
      const auto& c = table_[i * n_ + j];
      for (int k = 0; k < n_; ++k)
        if (!c[k].is_zero()) acc += c[k] * traces_[k];
      t(i, j) = std::move(acc);
    }
  }
  return det(t);
}

ResidueAlgebra::ResidueAlgebra(const Order& order, Poly pi)
    : order_(&order), pi_(std::move(pi)), dpi_(pi_.deg()), dim_(order.degree() * pi_.deg()) {}

std::vector<u32> ResidueAlgebra::to_vec(const std::vector<Poly>& coords) const {
  std::vector<u32> v(dim_, 0);
  for (int i = 0; i < order_->degree(); ++i) {
    Poly c = coords[i].deg() >= dpi_ ? coords[i] % pi_ : coords[i];
    for (int k = 0; k <= c.deg(); ++k) v[i * dpi_ + k] = c[k];
  }
  return v;
}

std::vector<Poly> ResidueAlgebra::to_coords(const std::vector<u32>& v) const {
  u32 p = order_->modulus();
  std::vector<Poly> c;
  c.reserve(order_->degree());
  for (int i = 0; i < order_->degree(); ++i) {
    c.emplace_back(p, std::vector<u32>(v.begin() + i * dpi_, v.begin() + (i + 1) * dpi_));
  }
  return c;
}

std::vector<u32> ResidueAlgebra::mul(const std::vector<u32>& a, const std::vector<u32>& b) const {
  return to_vec(order_->mul(to_coords(a), to_coords(b)));
}

std::vector<u32> ResidueAlgebra::one() const { return to_vec(order_->one()); }

FpMatrix ResidueAlgebra::frobenius() const {
  u32 p = order_->modulus();
  int n = order_->degree();
  auto reduce = [&](std::vector<Poly> c) {
    for (auto& e : c) e = e % pi_;
    return c;
  };
  auto powp = [&](std::vector<Poly> base) {
    std::vector<Poly> r = reduce(order_->one());
    u64 e = p;
    while (e) {
      if (e & 1) r = reduce(order_->mul(r, base));
      e >>= 1;
      if (e) base = reduce(order_->mul(base, base));
    }
    return r;
  };
  Poly zp = Poly::x(p).powmod(p, pi_);
  FpMatrix fm(dim_, dim_, p);
  for (int i = 0; i < n; ++i) {
    std::vector<Poly> ei(n, Poly(p));
    ei[i] = Poly::constant(p, 1);
    auto wp = powp(ei);
    Poly zk = Poly::constant(p, 1);
    for (int k = 0; k < dpi_; ++k) {
      std::vector<Poly> img = wp;
      for (auto& c : img) c = (c * zk) % pi_;
      auto v = to_vec(img);
      for (int r = 0; r < dim_; ++r) fm(r, i * dpi_ + k) = v[r];
      zk = (zk * zp) % pi_;
    }
  }
  return fm;
}

std::vector<std::vector<u32>> ResidueAlgebra::radical() const {
  u32 p = order_->modulus();
  FpMatrix f = frobenius();
  FpMatrix m = f;
  u64 pw = p;
  while (pw < static_cast<u64>(dim_)) {
    m = m * f;
    pw *= p;
  }
  return m.kernel();
}

std::vector<Poly> lower_solve(const PolyMatrix& l, std::vector<Poly> w) {
  int n = l.rows();
  u32 p = l.modulus();
  std::vector<Poly> x(n, Poly(p));
  for (int i = 0; i < n; ++i) {
    Poly acc = w[i];
    for (int j = 0; j < i; ++j)
      if (!l(i, j).is_zero() && !x[j].is_zero()) acc -= l(i, j) * x[j];
    auto [q, r] = acc.divrem(l(i, i));
    if (!r.is_zero()) throw Error("lattice solve is not integral");
    x[i] = std::move(q);
  }
  return x;
}

PolyMatrix lift_with_prime(const ResidueAlgebra& alg, const std::vector<std::vector<u32>>& vs) {
  const Order& o = alg.order();
  int n = o.degree();
  u32 p = o.modulus();
  PolyMatrix g(n, n + static_cast<int>(vs.size()), p);
  for (int i = 0; i < n; ++i) g(i, i) = alg.prime();
  for (size_t j = 0; j < vs.size(); ++j) {
    auto c = alg.to_coords(vs[j]);
    for (int i = 0; i < n; ++i) g(i, n + static_cast<int>(j)) = c[i];
  }
  return hnf_mod(std::move(g), alg.prime().pow(n));
}

Order round2(Order order, const Poly& pi) {
  int n = order.degree();
  u32 p = order.modulus();
  while (true) {
    ResidueAlgebra alg(order, pi);
    auto rad = alg.radical();
    if (rad.empty()) return order;
    PolyMatrix u = lift_with_prime(alg, rad);
    int dim = alg.dim();
    FpMatrix m(n * dim, dim, p);
    std::vector<u32> e(dim, 0);
    for (int b = 0; b < dim; ++b) {
      std::fill(e.begin(), e.end(), 0);
      e[b] = 1;
      auto eb = alg.to_coords(e);
      for (int j = 0; j < n; ++j) {
        auto x = lower_solve(u, order.mul(eb, u.column(j)));
        auto xv = alg.to_vec(x);
        for (int r = 0; r < dim; ++r) m(j * dim + r, b) = xv[r];
      }
    }
    auto ker = m.kernel();
    if (ker.empty()) return order;
    PolyMatrix h = lift_with_prime(alg, ker);
    PolyMatrix nb = order.basis() * h;
    Poly nd = order.denom() * pi;
    Poly g = nd;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!nb(i, j).is_zero()) g = gcd(g, nb(i, j));
    if (!g.is_one()) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nb(i, j) = nb(i, j) / g;
      nd = nd / g;
    }
    order = Order(order, std::move(nb), std::move(nd));
  }
}

Order maximal_order(u32 p, const std::vector<Poly>& defpoly, Side side, std::optional<Poly> local_prime) {
  Order o(p, defpoly, side, local_prime);
  Poly disc = defpoly_discriminant(defpoly);
  if (disc.is_zero()) throw Error("defining polynomial is inseparable");
  if (local_prime) {
    if (valuation(disc, *local_prime) >= 2) o = round2(std::move(o), *local_prime);
    return o;
  }
  Poly repeated = Poly::constant(p, 1);
  for (const auto& [g, m] : squarefree_decomposition(disc))
    if (m >= 2) repeated *= g;
  if (repeated.deg() <= 0) return o;
  for (const auto& [q, m] : factor(repeated)) o = round2(std::move(o), q);
  return o;
}

}  // namespace hessjac
