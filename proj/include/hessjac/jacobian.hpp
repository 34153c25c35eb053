#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>

#include "hessjac/riemann_roch.hpp"

namespace hessjac {

enum class Strategy { Linear, Binary };

struct OpCounters {
  u64 ssrr_calls = 0;
  u64 partial_additions = 0;
  u64 infinite_cache_hits = 0;
  u64 infinite_cache_misses = 0;
  u64 ssrr_cache_hits = 0;
  u64 ssrr_cache_misses = 0;
};

struct JacobianOptions {
  Strategy strategy = Strategy::Linear;
  bool caching = true;
  size_t infinite_cache_max = 0;  // 0: unbounded
  size_t ssrr_cache_max = 0;      // 0: unbounded
  /// Check v_A(D~) = 0, l(D~ - A) = 0 and l(D~) <= 1 on every output (slow).
  bool verify = false;
};

/// Unique representative D~ - rA of a degree-zero class, stored as the ideal
/// pair of -D~ (so that Riemann-Roch inputs are products of stored ideals).
struct ReducedClassRep {
  int r = 0;
  FractionalIdeal finite, infinite;

  bool operator==(const ReducedClassRep& o) const {
    return r == o.r && finite == o.finite && infinite == o.infinite;
  }
  std::string key() const;
};

struct HrMinResult {
  int r = 0;
  FFElem a;
};

/// Arithmetic in Jac(F) along a fixed degree-one place A, with the two
/// caches and the operation counters. Confined to one thread.
class JacobianCtx {
 public:
  /// A = the degree-one place with the smallest key, infinite preferred.
  explicit JacobianCtx(FieldPtr field, JacobianOptions opts = {});
  JacobianCtx(FieldPtr field, PlacePtr a, JacobianOptions opts = {});

  const FieldPtr& field() const { return field_; }
  const PlacePtr& base_place() const { return a_; }
  int genus() const { return g_; }
  const JacobianOptions& options() const { return opts_; }

  OpCounters counters() const;
  void reset_counters();
  size_t infinite_cache_size() const { return inf_cache_.size(); }
  size_t ssrr_cache_size() const { return ssrr_cache_.size(); }
  void clear_caches();

  /// Called with (m, ideal pair of -(E + mA)) before every SSRR call.
  std::function<void(int, const FractionalIdeal&, const FractionalIdeal&)> ssrr_trace;

  /// HR-Min for a degree-zero divisor, independent of the configured strategy.
  HrMinResult hr_min_linear(const Divisor& d);
  HrMinResult hr_min_binary(const Divisor& d);

  /// Throws "divisor degree must be zero".
  ReducedClassRep reduce(const Divisor& d);
  ReducedClassRep zero() const;
  ReducedClassRep add(const ReducedClassRep& c1, const ReducedClassRep& c2);
  ReducedClassRep neg(const ReducedClassRep& c);
  ReducedClassRep scalar_mul(i64 k, const ReducedClassRep& c);

  /// D~ as a formal sum.
  Divisor dtilde(const ReducedClassRep& c) const;
  /// D~ - rA.
  Divisor divisor(const ReducedClassRep& c) const;
  /// Random class: reduce(P_1 + ... + P_g - gA) for random degree-one places P_i.
  ReducedClassRep random_class(Rng& rng);

  /// Product of two infinite ideals through the addition cache.
  FractionalIdeal partial_add_infinite(const FractionalIdeal& j1, const FractionalIdeal& j2);
  FractionalIdeal partial_add_finite(const FractionalIdeal& i1, const FractionalIdeal& i2);

 private:
  struct Base {
    FractionalIdeal finite, infinite;  // ideal pair of -E
    int k0 = 0;                        // ideal pair of -(E + mA) is base * P_A^(k0 - m)
  };
  struct Probe {
    FractionalIdeal finite, infinite;
  };

  const FractionalIdeal& a_power(int k);
  Probe probe_ideals(const Base& b, int m);
  std::optional<FFElem> test(const Base& b, int m, std::map<int, Probe>& memo);
  HrMinResult run_linear(const Base& b, std::map<int, Probe>& memo);
  HrMinResult run_binary(const Base& b, std::map<int, Probe>& memo);
  ReducedClassRep finish(const Base& b, Strategy s);
  void check(const ReducedClassRep& c);
  Base base_of(const Divisor& d);

  FieldPtr field_;
  PlacePtr a_;
  int g_;
  JacobianOptions opts_;
  OpCounters counters_;
  size_t ssrr_hits0_ = 0, ssrr_misses0_ = 0;
  SsrrCache ssrr_cache_;
  std::unordered_map<std::string, FractionalIdeal> inf_cache_;
  std::map<int, FractionalIdeal> a_powers_;
};

}  // namespace hessjac
