#include "hessjac/place.hpp"

#include <algorithm>

#include "hessjac/poly_factor.hpp"

namespace hessjac {

namespace {

// O / rad(pi O), a product of finite fields, represented on the coordinates
// complementary to the pivots of a row-reduced radical basis.
class Semisimple {
 public:
  Semisimple(const ResidueAlgebra& alg, std::vector<std::vector<u32>> rad)
      : alg_(alg), rad_(std::move(rad)), p_(alg.order().modulus()) {
    int dim = alg_.dim();
    std::vector<bool> is_piv(dim, false);
    for (const auto& r : rad_) {
      int c = 0;
      while (!r[c]) ++c;
      piv_.push_back(c);
      is_piv[c] = true;
    }
    for (int c = 0; c < dim; ++c)
      if (!is_piv[c]) comp_.push_back(c);
  }

  int dim() const { return static_cast<int>(comp_.size()); }
  const std::vector<std::vector<u32>>& radical() const { return rad_; }

  std::vector<u32> project(std::vector<u32> v) const {
    for (size_t r = 0; r < rad_.size(); ++r) {
      u32 c = v[piv_[r]];
      if (!c) continue;
      for (size_t j = 0; j < v.size(); ++j)
        if (rad_[r][j]) v[j] = Zp::sub(v[j], Zp::mul(c, rad_[r][j], p_), p_);
    }
    std::vector<u32> out(comp_.size());
    for (size_t k = 0; k < comp_.size(); ++k) out[k] = v[comp_[k]];
    return out;
  }

  std::vector<u32> lift(const std::vector<u32>& q) const {
    std::vector<u32> v(alg_.dim(), 0);
    for (size_t k = 0; k < comp_.size(); ++k) v[comp_[k]] = q[k];
    return v;
  }

  std::vector<u32> mul(const std::vector<u32>& a, const std::vector<u32>& b) const {
    return project(alg_.mul(lift(a), lift(b)));
  }

  std::vector<u32> unit(int k) const {
    std::vector<u32> e(comp_.size(), 0);
    e[k] = 1;
    return e;
  }

 private:
  const ResidueAlgebra& alg_;
  std::vector<std::vector<u32>> rad_;
  std::vector<int> piv_, comp_;
  u32 p_;
};

std::vector<u32> axpy(const std::vector<u32>& x, u32 a, const std::vector<u32>& y, u32 p) {
  std::vector<u32> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = Zp::add(x[i], Zp::mul(a, y[i], p), p);
  return r;
}

// Split the idempotent e by the eigenvalues of b * e; returns {e} when b is
// constant on eA.
std::vector<std::vector<u32>> split(const Semisimple& q, const std::vector<u32>& e, const std::vector<u32>& b,
                                    u32 p) {
  int dim = q.dim();
  auto be = q.mul(b, e);
  std::vector<std::vector<u32>> seq{e};
  Poly mu;
  while (true) {
    seq.push_back(seq.size() == 1 ? be : q.mul(seq.back(), be));
    int k = static_cast<int>(seq.size());
    FpMatrix m(dim, k, p);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < dim; ++i) m(i, j) = seq[j][i];
    auto ker = m.kernel();
    if (!ker.empty()) {
      mu = Poly(p, ker[0]).monic();
      break;
    }
  }
  auto rs = roots(mu);
  if (rs.size() <= 1) return {e};
  if (static_cast<int>(rs.size()) != mu.deg()) throw Error("prime decomposition failed");
  std::vector<std::vector<u32>> out;
  for (size_t i = 0; i < rs.size(); ++i) {
    auto ei = e;
    for (size_t j = 0; j < rs.size(); ++j) {
      if (j == i) continue;
      u32 c = Zp::inv(Zp::sub(rs[i], rs[j], p), p);
      auto factor = axpy(be, Zp::neg(rs[j], p), e, p);
      for (auto& v : factor) v = Zp::mul(v, c, p);
      ei = q.mul(ei, factor);
    }
    out.push_back(std::move(ei));
  }
  return out;
}

void strip_content(std::vector<Poly>& v, const Poly& pi, int& count) {
  int s = -1;
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    int k = valuation(c, pi);
    s = s < 0 ? k : std::min(s, k);
  }
  if (s > 0) {
    Poly ps = pi.pow(s);
    for (auto& c : v) c = c / ps;
    count += s;
  }
}

}  // namespace

int Place::strip(std::vector<Poly>& cols, int ncols) const {
  // cols holds ncols integral vectors back to back; divides by beta while possible
  const Order& o = ideal_.order();
  int n = o.degree();
  int steps = 0;
  while (true) {
    std::vector<Poly> next(cols.size(), Poly(o.modulus()));
    for (int j = 0; j < ncols; ++j) {
      std::vector<Poly> c(cols.begin() + j * n, cols.begin() + (j + 1) * n);
      auto t = o.mul(beta_, c);
      for (int i = 0; i < n; ++i) {
        auto [qq, r] = t[i].divrem(prime_);
        if (!r.is_zero()) return steps;
        next[j * n + i] = std::move(qq);
      }
    }
    cols = std::move(next);
    ++steps;
  }
}

int Place::valuation(const PolyVec& a) const {
  if (a.is_zero()) throw Error("valuation of zero");
  std::vector<Poly> v = a.num;
  int s = 0;
  strip_content(v, prime_, s);
  int val = e_ * s + strip(v, 1);
  return val - e_ * hessjac::valuation(a.den, prime_);
}

int Place::valuation(const FractionalIdeal& ideal) const {
  if (ideal.order_ptr() != ideal_.order_ptr()) throw Error("ideal side mismatch");
  int n = ideal.order().degree();
  std::vector<Poly> cols;
  cols.reserve(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cols.push_back(ideal.hnf()(i, j));
  int s = 0;
  strip_content(cols, prime_, s);
  int val = e_ * s + strip(cols, n);
  return val - e_ * hessjac::valuation(ideal.denom(), prime_);
}

bool Place::operator<(const Place& o) const {
  if (side() != o.side()) return side() < o.side();
  if (prime_ != o.prime_) return prime_ < o.prime_;
  return index_ < o.index_;
}

std::vector<PlacePtr> decompose(const OrderPtr& order, const Poly& prime) {
  if (!prime.is_monic() || !is_irreducible(prime)) throw Error("base prime is not monic irreducible");
  u32 p = order->modulus();
  int n = order->degree();
  ResidueAlgebra alg(*order, prime);
  int dim = alg.dim();
  Semisimple q(alg, span_basis(alg.radical(), dim, p));
  int qd = q.dim();

  FpMatrix f = alg.frobenius();
  FpMatrix fq(qd, qd, p);
  for (int k = 0; k < qd; ++k) {
    auto img = q.project(f.apply(q.lift(q.unit(k))));
    for (int i = 0; i < qd; ++i) fq(i, k) = img[i];
  }
  auto berl = (fq - FpMatrix::identity(qd, p)).kernel();
  size_t s = berl.size();

  auto one = q.project(alg.one());
  std::vector<std::vector<u32>> idem{one};
  for (const auto& b : berl) {
    if (idem.size() == s) break;
    std::vector<std::vector<u32>> next;
    for (const auto& e : idem)
      for (auto& ei : split(q, e, b, p)) next.push_back(std::move(ei));
    idem = std::move(next);
  }
  if (idem.size() != s) throw Error("prime decomposition failed");

  Poly pin = prime.pow(n);
  std::vector<std::shared_ptr<Place>> places;
  for (const auto& e : idem) {
    auto pl = std::make_shared<Place>();
    pl->prime_ = prime;
    std::vector<u32> ce(qd);
    for (int i = 0; i < qd; ++i) ce[i] = Zp::sub(one[i], e[i], p);
    std::vector<std::vector<u32>> gens = q.radical();
    std::vector<std::vector<u32>> comp;
    for (int k = 0; k < qd; ++k) {
      gens.push_back(q.lift(q.mul(ce, q.unit(k))));
      comp.push_back(q.mul(e, q.unit(k)));
    }
    int deg = static_cast<int>(span_basis(comp, qd, p).size());
    if (deg % prime.deg()) throw Error("prime decomposition failed");
    pl->f_ = deg / prime.deg();
    PolyMatrix h = lift_with_prime(alg, span_basis(gens, dim, p));
    pl->ideal_ = FractionalIdeal::from_lattice(order, h, Poly::constant(p, 1), pin);

    // beta in P^-1 \ O: beta * P subset pi O
    const PolyMatrix& ph = pl->ideal_.hnf();
    FpMatrix m(n * dim, dim, p);
    for (int j = 0; j < n; ++j) {
      auto pj = alg.to_vec(ph.column(j));
      for (int b = 0; b < dim; ++b) {
        std::vector<u32> eb(dim, 0);
        eb[b] = 1;
        auto prod = alg.mul(eb, pj);
        for (int r = 0; r < dim; ++r) m(j * dim + r, b) = prod[r];
      }
    }
    auto ker = m.kernel();
    if (ker.empty()) throw Error("prime decomposition failed");
    pl->beta_ = alg.to_coords(ker[0]);
    pl->inverse_ = FractionalIdeal::from_lattice(order, lift_with_prime(alg, ker), prime, pin);

    std::vector<Poly> pi_vec = order->one();
    for (auto& c : pi_vec) c *= prime;
    pl->e_ = pl->strip(pi_vec, 1);
    places.push_back(std::move(pl));
  }

  int sum = 0;
  for (const auto& pl : places) sum += pl->e_ * pl->f_;
  if (sum != n) throw Error("prime decomposition failed");

  std::sort(places.begin(), places.end(),
            [](const auto& a, const auto& b) { return a->ideal_.key() < b->ideal_.key(); });
  std::vector<PlacePtr> out;
  for (size_t i = 0; i < places.size(); ++i) {
    auto& pl = places[i];
    pl->index_ = static_cast<int>(i);
    std::string key = order->side() == Side::Finite ? "F:" : "I:";
    if (order->side() == Side::Finite) {
      for (int k = 0; k <= prime.deg(); ++k) {
        if (k) key += ',';
        key += std::to_string(prime[k]);
      }
      key += ':';
    }
    key += std::to_string(i);
    pl->key_ = std::move(key);
    out.push_back(std::move(pl));
  }
  return out;
}

}  // namespace hessjac
