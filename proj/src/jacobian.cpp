#include "hessjac/jacobian.hpp"

namespace hessjac {

std::string ReducedClassRep::key() const {
  std::string k = std::to_string(r) + ":";
  k += finite.key();
  k += infinite.key();
  return k;
}

JacobianCtx::JacobianCtx(FieldPtr field, JacobianOptions opts)
    : JacobianCtx(field, find_degree_one_place(field, PlacePreference::Infinite), opts) {}

JacobianCtx::JacobianCtx(FieldPtr field, PlacePtr a, JacobianOptions opts)
    : field_(std::move(field)),
      a_(std::move(a)),
      g_(field_->genus()),
      opts_(opts),
      ssrr_cache_(opts.ssrr_cache_max) {
  if (a_->degree() != 1) throw Error("base place must have degree one");
  // precompute the multiples of A used by either strategy
  for (int k = -g_ - 1; k <= 2 * g_ + 1; ++k) a_power(k);
}

OpCounters JacobianCtx::counters() const {
  OpCounters c = counters_;
  c.ssrr_cache_hits = ssrr_cache_.hits() - ssrr_hits0_;
  c.ssrr_cache_misses = ssrr_cache_.misses() - ssrr_misses0_;
  return c;
}

void JacobianCtx::reset_counters() {
  counters_ = {};
  ssrr_hits0_ = ssrr_cache_.hits();
  ssrr_misses0_ = ssrr_cache_.misses();
}

void JacobianCtx::clear_caches() {
  inf_cache_.clear();
  ssrr_cache_.clear();
}

const FractionalIdeal& JacobianCtx::a_power(int k) {
  auto it = a_powers_.find(k);
  if (it != a_powers_.end()) return it->second;
  if (k == 0) return a_powers_.emplace(0, FractionalIdeal::unit(a_->ideal().order_ptr())).first->second;
  // walk from the nearest computed exponent towards k
  int step = k > 0 ? 1 : -1;
  int from = 0;
  for (int j = k - step; j != 0; j -= step) {
    if (a_powers_.count(j)) {
      from = j;
      break;
    }
  }
  FractionalIdeal cur = a_power(from);
  const FractionalIdeal& factor = k > 0 ? a_->ideal() : a_->inverse();
  for (int j = from + step;; j += step) {
    cur = cur * factor;
    a_powers_.emplace(j, cur);
    if (j == k) break;
  }
  return a_powers_.at(k);
}

FractionalIdeal JacobianCtx::partial_add_infinite(const FractionalIdeal& j1, const FractionalIdeal& j2) {
  ++counters_.partial_additions;
  if (!opts_.caching) return j1 * j2;
  std::string k1 = j1.key(), k2 = j2.key();
  if (k2 < k1) std::swap(k1, k2);
  std::string key = std::to_string(k1.size()) + ":" + k1 + k2;
  auto it = inf_cache_.find(key);
  if (it != inf_cache_.end()) {
    ++counters_.infinite_cache_hits;
    return it->second;
  }
  ++counters_.infinite_cache_misses;
  FractionalIdeal prod = j1 * j2;
  if (opts_.infinite_cache_max == 0 || inf_cache_.size() < opts_.infinite_cache_max) inf_cache_.emplace(key, prod);
  return prod;
}

FractionalIdeal JacobianCtx::partial_add_finite(const FractionalIdeal& i1, const FractionalIdeal& i2) {
  ++counters_.partial_additions;
  return i1 * i2;
}

JacobianCtx::Probe JacobianCtx::probe_ideals(const Base& b, int m) {
  const FractionalIdeal& pa = a_power(b.k0 - m);
  if (a_->side() == Side::Infinite) return {b.finite, partial_add_infinite(b.infinite, pa)};
  return {partial_add_finite(b.finite, pa), b.infinite};
}

std::optional<FFElem> JacobianCtx::test(const Base& b, int m, std::map<int, Probe>& memo) {
  auto it = memo.emplace(m, probe_ideals(b, m)).first;
  ++counters_.ssrr_calls;
  if (ssrr_trace) ssrr_trace(m, it->second.finite, it->second.infinite);
  return ssrr(*field_, it->second.finite, it->second.infinite, opts_.caching ? &ssrr_cache_ : nullptr);
}

namespace {

Error no_solution() { return Error("HR-Min found no m <= g with l(D + mA) > 0"); }

}  // namespace

HrMinResult JacobianCtx::run_linear(const Base& b, std::map<int, Probe>& memo) {
  if (g_ <= 1) {
    for (int m = 0; m <= g_; ++m)
      if (auto a = test(b, m, memo)) return {m, *a};
    throw no_solution();
  }
  auto a = test(b, g_ - 1, memo);
  if (!a) {
    auto ag = test(b, g_, memo);
    if (!ag) throw no_solution();
    return {g_, *ag};
  }
  HrMinResult res{g_ - 1, *a};
  for (int m = g_ - 2; m >= 0; --m) {
    auto t = test(b, m, memo);
    if (!t) break;
    res = {m, *t};
  }
  return res;
}

HrMinResult JacobianCtx::run_binary(const Base& b, std::map<int, Probe>& memo) {
  if (g_ <= 1) return run_linear(b, memo);
  // invariant: l(E + lo A) = 0 unless lo == 0 and unchecked; l(E + hi A) > 0
  int lo = 0, hi = g_;
  std::optional<FFElem> at_hi;
  while (hi - lo > 1) {
    int mid = (lo + hi + 1) / 2;
    if (auto a = test(b, mid, memo)) {
      hi = mid;
      at_hi = std::move(a);
    } else {
      lo = mid;
    }
  }
  if (lo == 0 && !memo.count(0)) {
    if (auto a = test(b, 0, memo)) return {0, *a};
  }
  if (!at_hi) {
    at_hi = test(b, hi, memo);
    if (!at_hi) throw no_solution();
  }
  return {hi, *at_hi};
}

JacobianCtx::Base JacobianCtx::base_of(const Divisor& d) {
  if (d.field() && d.field() != field_) throw Error("divisor field mismatch");
  if (d.degree() != 0) throw Error("divisor degree must be zero");
  auto pair = to_ideal_pair(-d);
  return {pair.finite, pair.infinite, 0};
}

HrMinResult JacobianCtx::hr_min_linear(const Divisor& d) {
  std::map<int, Probe> memo;
  return run_linear(base_of(d), memo);
}

HrMinResult JacobianCtx::hr_min_binary(const Divisor& d) {
  std::map<int, Probe> memo;
  return run_binary(base_of(d), memo);
}

ReducedClassRep JacobianCtx::finish(const Base& b, Strategy s) {
  std::map<int, Probe> memo;
  HrMinResult res = s == Strategy::Linear ? run_linear(b, memo) : run_binary(b, memo);
  const Probe& pr = memo.at(res.r);
  // -(E + rA + div a) = -(E + rA) - div(a)
  FFElem inv = field_->inv(res.a);
  ReducedClassRep c;
  c.r = res.r;
  ++counters_.partial_additions;
  c.finite = pr.finite.mul_element(field_->to_order(Side::Finite, inv));
  auto ja = FractionalIdeal::principal(field_->infinite_order(), field_->to_order(Side::Infinite, inv));
  c.infinite = partial_add_infinite(pr.infinite, ja);
  check(c);
  return c;
}

void JacobianCtx::check(const ReducedClassRep& c) {
  auto fail = [](const char* what) { return Error(std::string("reduction invariant violated: ") + what); };
  if (c.r < 0 || c.r > g_) throw fail("0 <= r <= g");
  if (c.finite.norm_degree() + c.infinite.norm_degree() != -c.r) throw fail("deg D~ = r");
  if (!c.finite.contains(PolyVec::integral(field_->finite_order()->one())) ||
      !c.infinite.contains(PolyVec::integral(field_->infinite_order()->one())))
    throw fail("D~ >= 0");
  const FractionalIdeal& at_a = a_->side() == Side::Finite ? c.finite : c.infinite;
  if (a_->valuation(at_a) != 0) throw fail("v_A(D~) = 0");
  if (opts_.verify) {
    auto pa = a_->side() == Side::Finite ? std::make_pair(c.finite * a_->ideal(), c.infinite)
                                         : std::make_pair(c.finite, c.infinite * a_->ideal());
    if (rr_basis(*field_, pa.first, pa.second).dim() != 0) throw fail("l(D~ - A) = 0");
    if (rr_basis(*field_, c.finite, c.infinite).dim() > 1) throw fail("l(D~) <= 1");
  }
}

ReducedClassRep JacobianCtx::reduce(const Divisor& d) { return finish(base_of(d), opts_.strategy); }

ReducedClassRep JacobianCtx::zero() const {
  return {0, FractionalIdeal::unit(field_->finite_order()), FractionalIdeal::unit(field_->infinite_order())};
}

ReducedClassRep JacobianCtx::add(const ReducedClassRep& c1, const ReducedClassRep& c2) {
  if (c1.finite.order_ptr() != field_->finite_order() || c2.finite.order_ptr() != field_->finite_order())
    throw Error("class representative belongs to another context");
  Base b{partial_add_finite(c1.finite, c2.finite), partial_add_infinite(c1.infinite, c2.infinite), c1.r + c2.r};
  return finish(b, opts_.strategy);
}

ReducedClassRep JacobianCtx::neg(const ReducedClassRep& c) {
  // -(D~ - rA) = -D~ + rA, whose negative has ideal pair (stored)^-1 * P_A^-r
  Base b{c.finite.inverse(), c.infinite.inverse(), -c.r};
  return finish(b, opts_.strategy);
}

ReducedClassRep JacobianCtx::scalar_mul(i64 k, const ReducedClassRep& c) {
  if (k < 0) return scalar_mul(-k, neg(c));
  ReducedClassRep acc = zero();
  ReducedClassRep base = c;
  while (k) {
    if (k & 1) acc = add(acc, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return acc;
}

Divisor JacobianCtx::dtilde(const ReducedClassRep& c) const {
  return from_ideal_pair(field_, {c.finite.inverse(), c.infinite.inverse()});
}

Divisor JacobianCtx::divisor(const ReducedClassRep& c) const {
  return dtilde(c) + Divisor::of_place(field_, a_, -c.r);
}

ReducedClassRep JacobianCtx::random_class(Rng& rng) {
  if (g_ == 0) return zero();
  u32 p = field_->p();
  Divisor d(field_);
  int deg = 0;
  int attempts = 0;
  while (deg < g_) {
    if (++attempts > 1000 * (g_ + 1)) throw Error("no degree-one places for random classes");
    u32 c = static_cast<u32>(rng() % p);
    const auto& places = field_->places_above(Poly::x(p) - Poly::constant(p, c));
    std::vector<PlacePtr> ones;
    for (const auto& pl : places)
      if (pl->degree() == 1 && !(*pl == *a_)) ones.push_back(pl);
    if (ones.empty()) continue;
    d.add_term(ones[rng() % ones.size()], 1);
    ++deg;
  }
  d.add_term(a_, -g_);
  return reduce(d);
}

}  // namespace hessjac
