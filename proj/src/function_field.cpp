#include "hessjac/function_field.hpp"

#include <algorithm>
#include <bitset>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hessjac/poly_factor.hpp"
#include "hessjac/riemann_roch.hpp"

namespace hessjac {

FFElem::FFElem(PolyVec v) : v_(std::move(v)) { v_.normalize(); }

FFElem FFElem::from_coords(const std::vector<RatFunc>& coords) {
  u32 p = coords.at(0).den().modulus();
  Poly den = Poly::constant(p, 1);
  for (const auto& c : coords) den = den / gcd(den, c.den()) * c.den();
  PolyVec v;
  for (const auto& c : coords) v.num.push_back(c.num() * (den / c.den()));
  v.den = den;
  return FFElem(std::move(v));
}

std::vector<RatFunc> FFElem::coords() const {
  std::vector<RatFunc> out;
  for (int i = 0; i < degree(); ++i) out.push_back(coord(i));
  return out;
}

FFElem FFElem::normalized() const {
  FFElem r = *this;
  for (const auto& c : v_.num) {
    if (c.is_zero()) continue;
    u32 inv = Zp::inv(c.lc(), c.modulus());
    for (auto& d : r.v_.num) d = d.scale(inv);
    break;
  }
  return r;
}

std::string FFElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (v_.num[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v_.num[i].str() << ")";
    if (i == 1) os << "*y";
    if (i > 1) os << "*y^" << i;
  }
  if (first) os << "0";
  if (!v_.den.is_one()) os << " / (" << v_.den.str() << ")";
  return os.str();
}

int compute_cf(const std::vector<Poly>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  int cf = 0;
  for (int i = 0; i < n; ++i) {
    if (coeffs[i].is_zero()) continue;
    int m = n - i;
    cf = std::max(cf, (coeffs[i].deg() + m - 1) / m);
  }
  return cf;
}

namespace {

using Bivariate = std::vector<Poly>;  // x-adic expansion: sum_k x^k F_k(t)

Poly specialize(const std::vector<Poly>& coeffs, u32 c) {
  u32 p = coeffs[0].modulus();
  std::vector<u32> t(coeffs.size() + 1);
  for (size_t i = 0; i < coeffs.size(); ++i) t[i] = coeffs[i].eval(c);
  t.back() = 1;
  return Poly(p, std::move(t));
}

// subset sums of factor degrees strictly between 0 and n
std::bitset<64> possible_degrees(const std::vector<int>& degs, int n) {
  std::bitset<64> s;
  s[0] = true;
  for (int d : degs) s |= s << d;
  s[0] = false;
  s[n] = false;
  return s;
}

Bivariate to_bivariate(const std::vector<Poly>& coeffs) {
  u32 p = coeffs[0].modulus();
  int n = static_cast<int>(coeffs.size());
  int maxdeg = 0;
  for (const auto& a : coeffs) maxdeg = std::max(maxdeg, a.deg());
  Bivariate f(maxdeg + 1);
  for (int k = 0; k <= maxdeg; ++k) {
    std::vector<u32> t(n + 1, 0);
    for (int i = 0; i < n; ++i) t[i] = coeffs[i][k];
    if (k == 0) t[n] = 1;
    f[k] = Poly(p, std::move(t));
  }
  return f;
}

// Does f (monic in t, x-adic) have a factor lifting g0 with cofactor f0/g0?
bool hensel_factor_exists(const Bivariate& f, const Poly& g0, int bound) {
  u32 p = g0.modulus();
  Poly h0 = f[0] / g0;
  auto eg = xgcd(g0, h0);  // s g0 + t h0 = 1
  int len = bound + 1;
  Bivariate g(len, Poly(p)), h(len, Poly(p));
  g[0] = g0;
  h[0] = h0;
  for (int k = 1; k < len; ++k) {
    Poly e = k < static_cast<int>(f.size()) ? f[k] : Poly(p);
    for (int i = 1; i < k; ++i)
      if (!g[i].is_zero() && !h[k - i].is_zero()) e -= g[i] * h[k - i];
    g[k] = (e * eg.t) % g0;
    h[k] = (e - g[k] * h0) / g0;
  }
  // true factors have x-degree <= cf * (t-degree); the caller passes bound for both
  int fx = static_cast<int>(f.size());
  for (int k = 0; k < fx || k < 2 * len; ++k) {
    Poly acc(p);
    for (int i = 0; i <= k && i < len; ++i)
      if (k - i < len && !g[i].is_zero() && !h[k - i].is_zero()) acc += g[i] * h[k - i];
    Poly want = k < fx ? f[k] : Poly(p);
    if (acc != want) return false;
  }
  return true;
}

bool hensel_reducible(const std::vector<Poly>& coeffs, u32 c, int cf) {
  u32 p = coeffs[0].modulus();
  int n = static_cast<int>(coeffs.size());
  Poly shift = Poly::x(p) + Poly::constant(p, c);
  std::vector<Poly> shifted;
  for (const auto& a : coeffs) shifted.push_back(a.compose(shift));
  Bivariate f = to_bivariate(shifted);
  auto fac = factor(f[0]);
  std::vector<Poly> parts;
  for (auto& [q, m] : fac) parts.push_back(q);
  int r = static_cast<int>(parts.size());
  int bound = cf * n;
  for (u32 mask = 1; mask + 1 < (1u << r); ++mask) {
    if (!(mask & 1)) continue;
    Poly g0 = Poly::constant(p, 1);
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) g0 *= parts[i];
    if (hensel_factor_exists(f, g0, bound)) return true;
  }
  return false;
}

}  // namespace

bool is_irreducible(const std::vector<Poly>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  if (n < 1) return false;
  if (n == 1) return true;
  if (n > 63) throw Error("degree too large");
  u32 p = coeffs[0].modulus();
  Poly disc = defpoly_discriminant(coeffs);
  if (disc.is_zero()) throw Error("defining polynomial is inseparable");
  int cf = compute_cf(coeffs);

  std::bitset<64> candidates;
  candidates.set();
  std::optional<u32> good;
  u32 tries = std::min<u32>(p, 64);
  for (u32 c = 0; c < tries; ++c) {
    u32 cc = p <= 64 ? c : static_cast<u32>((static_cast<u64>(c) * 2654435761u) % p);
    if (disc.eval(cc) == 0) continue;
    Poly s = specialize(coeffs, cc);
    auto fac = factor(s);
    if (fac.size() == 1) return true;
    if (!good) good = cc;
    std::vector<int> degs;
    for (auto& [q, m] : fac) degs.push_back(q.deg());
    candidates &= possible_degrees(degs, n);
    if (candidates.none()) return true;
  }
  if (good) return !hensel_reducible(coeffs, *good, cf);

  // every rational specialization is singular: use residue degrees above
  // primes of higher degree that do not divide the discriminant
  auto order = std::make_shared<const Order>(p, coeffs, Side::Finite);
  for (int d = 2; d <= 4; ++d) {
    for (const auto& q : monic_irreducibles(p, d)) {
      if ((disc % q).is_zero()) continue;
      auto places = decompose(order, q);
      if (places.size() == 1) return true;
      std::vector<int> degs;
      for (const auto& pl : places) degs.push_back(pl->inertia());
      candidates &= possible_degrees(degs, n);
      if (candidates.none()) return true;
    }
  }
  throw Error("irreducibility test inconclusive");
}

FieldPtr FunctionField::make(u32 p, std::vector<Poly> coeffs) {
  check_modulus(p);
  int n = static_cast<int>(coeffs.size());
  if (n < 2) throw Error("degree too small");
  for (auto& c : coeffs) {
    if (c.modulus() == 0) c = Poly(p);
    if (c.modulus() != p) throw Error("coefficient modulus mismatch");
  }
  if (!is_irreducible(coeffs)) throw Error("defining polynomial reducible");

  std::shared_ptr<FunctionField> f(new FunctionField());
  f->p_ = p;
  f->n_ = n;
  f->coeffs_ = std::move(coeffs);
  f->cf_ = compute_cf(f->coeffs_);
  for (int i = 0; i < n; ++i) {
    const Poly& a = f->coeffs_[i];
    f->inf_coeffs_.push_back(a.is_zero() ? a : a.reverse(f->cf_ * (n - i)));
  }
  f->fin_ = std::make_shared<const Order>(maximal_order(p, f->coeffs_, Side::Finite));
  f->inf_ = std::make_shared<const Order>(maximal_order(p, f->inf_coeffs_, Side::Infinite, Poly::x(p)));
  f->inf_places_ = decompose(f->inf_, Poly::x(p));
  return f;
}

const std::vector<PlacePtr>& FunctionField::places_above(const Poly& prime) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = finite_places_.find(prime);
  if (it != finite_places_.end()) return it->second;
  auto places = decompose(fin_, prime);
  return finite_places_.emplace(prime, std::move(places)).first->second;
}

PlacePtr FunctionField::place_by_key(const std::string& key) const {
  auto bad = [&]() { return Error("unknown place key: " + key); };
  if (key.size() < 3 || key[1] != ':') throw bad();
  auto last = key.rfind(':');
  int idx = 0;
  try {
    idx = std::stoi(key.substr(last + 1));
  } catch (const std::exception&) {
    throw bad();
  }
  const std::vector<PlacePtr>* list = nullptr;
  if (key[0] == 'I') {
    list = &inf_places_;
  } else if (key[0] == 'F' && last > 2) {
    std::vector<i64> cs;
    std::stringstream ss(key.substr(2, last - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) cs.push_back(std::stoll(tok));
    list = &places_above(Poly::from_ints(p_, cs));
  } else {
    throw bad();
  }
  if (idx < 0 || idx >= static_cast<int>(list->size())) throw bad();
  return (*list)[idx];
}

int FunctionField::genus_bound() const {
  int b = (cf_ * n_ - 2) * (n_ - 1);
  return b > 0 ? b / 2 : 0;
}

int FunctionField::genus() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (genus_) return *genus_;
  }
  // any place works; take the first infinite one
  const PlacePtr& pl = inf_places_.front();
  int d = pl->degree();
  int m = std::max(1, (2 * genus_bound() + 1 + d - 1) / d);
  auto fin = FractionalIdeal::unit(fin_);
  auto inf = pl->inverse().pow(m);
  int l = rr_basis(*this, fin, inf).dim();
  int g = m * d + 1 - l;
  std::lock_guard<std::mutex> lock(mu_);
  genus_ = g;
  return g;
}

FFElem FunctionField::zero() const {
  return FFElem(PolyVec::integral(std::vector<Poly>(n_, Poly(p_))));
}

FFElem FunctionField::constant(u32 c) const {
  std::vector<Poly> v(n_, Poly(p_));
  v[0] = Poly::constant(p_, c);
  return FFElem(PolyVec::integral(std::move(v)));
}

FFElem FunctionField::one() const { return constant(1); }

FFElem FunctionField::from_ratfunc(const RatFunc& r) const {
  std::vector<Poly> v(n_, Poly(p_));
  v[0] = r.num();
  return FFElem(PolyVec{std::move(v), r.den()});
}

FFElem FunctionField::gen_x() const { return from_ratfunc(RatFunc(Poly::x(p_))); }

FFElem FunctionField::gen_y() const {
  std::vector<Poly> v(n_, Poly(p_));
  v[1] = Poly::constant(p_, 1);
  return FFElem(PolyVec::integral(std::move(v)));
}

FFElem FunctionField::add(const FFElem& a, const FFElem& b) const {
  const auto& x = a.power();
  const auto& y = b.power();
  Poly g = gcd(x.den, y.den);
  Poly fx = y.den / g, fy = x.den / g;
  PolyVec r;
  for (int i = 0; i < n_; ++i) r.num.push_back(x.num[i] * fx + y.num[i] * fy);
  r.den = x.den * fx;
  return FFElem(std::move(r));
}

FFElem FunctionField::neg(const FFElem& a) const {
  PolyVec r = a.power();
  for (auto& c : r.num) c = -c;
  return FFElem(std::move(r));
}

FFElem FunctionField::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem FunctionField::mul(const FFElem& a, const FFElem& b) const {
  PolyVec r{power_basis_mul(a.power().num, b.power().num, coeffs_), a.power().den * b.power().den};
  return FFElem(std::move(r));
}

namespace {

PolyMatrix power_mult_matrix(const std::vector<Poly>& a, const std::vector<Poly>& defpoly) {
  int n = static_cast<int>(defpoly.size());
  u32 p = defpoly[0].modulus();
  PolyMatrix m(n, n, p);
  std::vector<Poly> col = a;
  for (int j = 0; j < n; ++j) {
    m.set_column(j, col);
    std::vector<Poly> t(n, Poly(p));
    t[1 % n] = Poly::constant(p, 1);
    col = power_basis_mul(col, t, defpoly);
  }
  return m;
}

}  // namespace

FFElem FunctionField::inv(const FFElem& a) const {
  if (a.is_zero()) throw Error("inverse of zero element");
  auto si = scaled_inverse(power_mult_matrix(a.power().num, coeffs_));
  PolyVec r;
  for (int i = 0; i < n_; ++i) r.num.push_back(si.r(i, 0) * a.power().den);
  r.den = si.d;
  return FFElem(std::move(r));
}

RatFunc FunctionField::norm(const FFElem& a) const {
  return RatFunc(det(power_mult_matrix(a.power().num, coeffs_)), a.power().den.pow(n_));
}

FFElem FunctionField::random_element(Rng& rng, int deg) const {
  std::vector<Poly> v;
  for (int i = 0; i < n_; ++i) v.push_back(Poly::random(p_, deg, rng));
  return FFElem(PolyVec::integral(std::move(v)));
}

PolyVec FunctionField::to_order(Side s, const FFElem& a) const {
  if (s == Side::Finite) return fin_->to_coords(a.power());
  const PolyVec& v = a.power();
  std::vector<Poly> nx(n_);
  int e = -1;
  for (int i = 0; i < n_; ++i) {
    nx[i] = v.num[i].shift(i * cf_);
    if (!nx[i].is_zero()) e = std::max(e, nx[i].deg());
  }
  if (e < 0) return PolyVec::integral(std::vector<Poly>(n_, Poly(p_)));
  int dd = v.den.deg();
  PolyVec w;
  for (int i = 0; i < n_; ++i) w.num.push_back(nx[i].is_zero() ? nx[i] : nx[i].reverse(e));
  w.den = v.den.reverse(dd);
  if (dd >= e) {
    for (auto& c : w.num) c = c.shift(dd - e);
  } else {
    w.den = w.den.shift(e - dd);
  }
  w.normalize();
  return inf_->to_coords(w);
}

FFElem FunctionField::from_order(Side s, const PolyVec& c) const {
  if (s == Side::Finite) return FFElem(fin_->from_coords(c));
  PolyVec w = inf_->from_coords(c);
  int e = -1;
  for (int i = 0; i < n_; ++i)
    if (!w.num[i].is_zero()) e = std::max(e, w.num[i].deg() + i * cf_);
  if (e < 0) return zero();
  int dd = w.den.deg();
  PolyVec v;
  for (int i = 0; i < n_; ++i) v.num.push_back(w.num[i].is_zero() ? w.num[i] : w.num[i].reverse(e - i * cf_));
  v.den = w.den.reverse(dd);
  if (dd >= e) {
    for (auto& x : v.num) x = x.shift(dd - e);
  } else {
    v.den = v.den.shift(e - dd);
  }
  return FFElem(std::move(v));
}

std::string FunctionField::defpoly_str() const {
  std::ostringstream os;
  os << "t^" << n_;
  for (int i = n_ - 1; i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    os << " + (" << coeffs_[i].str() << ")";
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

std::string FunctionField::to_json(const std::string& metadata_json) const {
  nlohmann::ordered_json j;
  j["p"] = p_;
  j["n"] = n_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : coeffs_) arr.push_back(a.coeffs());
  j["coeffs"] = arr;
  if (!metadata_json.empty()) j["metadata"] = nlohmann::ordered_json::parse(metadata_json);
  return j.dump();
}

FieldPtr FunctionField::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid field file: ") + e.what());
  }
  if (!j.contains("p") || !j.contains("n") || !j.contains("coeffs")) throw Error("invalid field file: missing key");
  u32 p = j["p"].get<u32>();
  int n = j["n"].get<int>();
  check_modulus(p);
  std::vector<Poly> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(Poly::from_ints(p, c.get<std::vector<i64>>()));
  if (static_cast<int>(coeffs.size()) != n) throw Error("invalid field file: n does not match coeffs");
  return make(p, std::move(coeffs));
}

FieldPtr FunctionField::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void FunctionField::save(const std::string& path, const std::string& metadata_json) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_json(metadata_json) << "\n";
}

}  // namespace hessjac
