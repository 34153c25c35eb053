// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [--perf]   (--perf adds the g = 100 timing ratio check)

#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hessjac/bench.hpp"
#include "hessjac/oracles.hpp"
#include "hessjac/poly_factor.hpp"

using namespace hessjac;

namespace {

constexpr u32 kP = 32771;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct NamedField {
  std::string label;
  FieldPtr field;
};

FieldPtr make(u32 p, std::vector<std::vector<i64>> c) {
  std::vector<Poly> a;
  for (auto& v : c) a.push_back(Poly::from_ints(p, v));
  return FunctionField::make(p, std::move(a));
}

// (g, n) in {(2,2), (4,3), (7,3), (15,4 ad hoc), (10,2)} over F_32771
const std::vector<NamedField>& corpus() {
  static const std::vector<NamedField> fields = [] {
    std::vector<NamedField> v;
    v.push_back({"(2,2)", gen_tang(kP, 2, 3, 11).field});
    v.push_back({"(4,3)", gen_tang(kP, 3, 2, 12).field});
    v.push_back({"(7,3)", gen_tang(kP, 3, 3, 13).field});
    v.push_back({"(15,4)", gen_adhoc(kP, 4, 6, 104, 15).field});
    v.push_back({"(10,2)", gen_tang(kP, 2, 11, 15).field});
    return v;
  }();
  return fields;
}

Divisor random_degree_zero(JacobianCtx& ctx, Rng& rng) {
  const auto& f = ctx.field();
  u32 p = f->p();
  Divisor d(f);
  int terms = 2 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<PlacePtr> pls;
    if (rng() % 5 == 0) {
      pls = f->infinite_places();
    } else {
      Poly q = Poly::random(p, 1 + static_cast<int>(rng() % 2), rng, true);
      if (!is_irreducible(q)) continue;
      pls = f->places_above(q);
    }
    int k = static_cast<int>(rng() % 5) - 2;
    d.add_term(pls[rng() % pls.size()], k == 0 ? 1 : k);
  }
  return d + Divisor::of_place(f, ctx.base_place(), -d.degree());
}

std::string fmt(double x, int prec = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(prec) << x;
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome group_axioms() {
  int failures = 0, checks = 0;
  for (const auto& nf : corpus()) {
    JacobianCtx ctx(nf.field);
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
      auto a = ctx.random_class(rng), b = ctx.random_class(rng), c = ctx.random_class(rng);
      failures += !(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
      failures += !(ctx.add(a, ctx.zero()) == a);
      failures += !(ctx.add(ctx.zero(), a) == a);
      failures += !(ctx.add(a, ctx.neg(a)) == ctx.zero());
      checks += 4;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(checks) +
                             " checks (100 triples on each of 5 fields)"};
}

// Reduction outputs of criterion 2, kept for the invariant check.
std::vector<std::pair<size_t, ReducedClassRep>> g_outputs;

Outcome uniqueness() {
  int failures = 0, checks = 0;
  g_outputs.clear();
  for (size_t fi = 0; fi < corpus().size(); ++fi) {
    const auto& f = corpus()[fi].field;
    JacobianCtx ctx(f);
    Rng rng(202);
    for (int t = 0; t < 50; ++t) {
      auto d = random_degree_zero(ctx, rng);
      auto h = f->random_element(rng, 2);
      if (h.is_zero()) h = f->gen_y();
      auto x = ctx.reduce(d);
      auto y = ctx.reduce(d + principal_divisor(f, h));
      failures += !(x == y);
      ++checks;
      g_outputs.emplace_back(fi, x);
      g_outputs.emplace_back(fi, y);
    }
  }
  return {failures == 0, std::to_string(failures) + " mismatches in " + std::to_string(checks) + " (D, h) pairs"};
}

Outcome invariants() {
  int failures = 0;
  for (const auto& [fi, c] : g_outputs) {
    const auto& f = corpus()[fi].field;
    JacobianCtx ctx(f);
    int g = ctx.genus();
    const auto& a = ctx.base_place();
    Divisor dt = ctx.dtilde(c);
    bool ok = dt.is_effective() && dt.coefficient(a) == 0 && dt.degree() == c.r && c.r >= 0 && c.r <= g &&
              rr_dimension(dt - Divisor::of_place(f, a)) == 0 && rr_dimension(dt) <= 1;
    failures += !ok;
  }
  return {failures == 0 && !g_outputs.empty(),
          std::to_string(g_outputs.size() - failures) + "/" + std::to_string(g_outputs.size()) +
              " outputs satisfy D~ >= 0, v_A(D~) = 0, 0 <= r = deg D~ <= g, l(D~ - A) = 0, l(D~) <= 1"};
}

Outcome oracle_equivalence() {
  int failures = 0, checks = 0, lines = 0;
  for (const auto& nf : corpus()) {
    JacobianCtx ctx(nf.field);
    Rng rng(404);
    for (int t = 0; t < 100; ++t) {
      auto d = random_degree_zero(ctx, rng);
      auto b = brute_hr_min(ctx, d);
      auto l = ctx.hr_min_linear(d);
      auto s = ctx.hr_min_binary(d);
      bool ok = l.r == b.r && s.r == b.r && l.a == b.a && s.a == b.a;
      // spot-check the divisors of a themselves
      if (ok && t % 10 == 0) {
        auto db = principal_divisor(nf.field, b.a);
        ok = principal_divisor(nf.field, l.a) == db && principal_divisor(nf.field, s.a) == db;
        ++lines;
      }
      failures += !ok;
      ++checks;
    }
  }
  return {failures == 0, std::to_string(failures) + " disagreements in " + std::to_string(checks) +
                             " divisors (r and normalized a; div(a) compared on " + std::to_string(lines) + ")"};
}

double r_equals_g_fraction(const FieldPtr& f, int trials, u64 seed) {
  JacobianCtx ctx(f);
  Rng rng(seed);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    auto a = ctx.random_class(rng), b = ctx.random_class(rng);
    hits += ctx.add(a, b).r == ctx.genus();
  }
  return static_cast<double>(hits) / trials;
}

Outcome typical_frequency() {
  double big = r_equals_g_fraction(corpus()[1].field, 1000, 505);
  auto small_field = gen_tang(5, 3, 2, 5).field;
  double small = r_equals_g_fraction(small_field, 1000, 506);
  bool ok = big >= 0.99 && std::abs(small - 0.8) <= 0.10;
  return {ok, "q=32771 (g=4): " + fmt(big) + " (need >= 0.99); q=5 (g=" + std::to_string(small_field->genus()) +
                  "): " + fmt(small) + " (need 0.800 +- 0.100)"};
}

Outcome counter_claims() {
  int typical = 0, failures = 0, height_checks = 0;
  std::ostringstream detail;
  for (size_t fi : {0, 1, 2, 3}) {
    const auto& f = corpus()[fi].field;
    for (Strategy s : {Strategy::Linear, Strategy::Binary}) {
      JacobianOptions o;
      o.strategy = s;
      JacobianCtx ctx(f, o);
      int g = ctx.genus();
      u64 expected = s == Strategy::Linear ? 2 : static_cast<u64>(std::ceil(std::log2(g + 1)));
      Rng rng(606);
      for (int t = 0; t < 30; ++t) {
        auto a = ctx.random_class(rng), b = ctx.random_class(rng);
        if (a.r != g || b.r != g) continue;
        std::vector<int> heights;
        ctx.ssrr_trace = [&](int, const FractionalIdeal& fin, const FractionalIdeal& inf) {
          heights.push_back(from_ideal_pair(f, {fin, inf}).height());
        };
        ctx.reset_counters();
        auto c = ctx.add(a, b);
        ctx.ssrr_trace = nullptr;
        if (c.r != g) continue;
        ++typical;
        failures += ctx.counters().ssrr_calls != expected;
        if (s == Strategy::Linear) {
          auto da = ctx.dtilde(a), db = ctx.dtilde(b);
          bool disjoint = true;
          for (const auto& [pl, k] : da.terms()) disjoint = disjoint && db.coefficient(pl) == 0;
          if (disjoint) {
            ++height_checks;
            failures += !(heights.size() == 2 && heights[0] == 3 * g + 1 && heights[1] == 3 * g);
          }
        }
      }
    }
  }
  detail << typical << " typical additions (linear: 2 SSRR calls, binary: ceil(log2(g+1))), " << height_checks
         << " height checks (3g+1, 3g), " << failures << " failures";
  return {failures == 0 && typical > 100 && height_checks > 50, detail.str()};
}

double time_ratio(int cf, int additions, u64 seed, int* genus) {
  auto gf = gen_tang(kP, 3, cf, seed);
  *genus = gf.genus;
  BenchConfig lin{Strategy::Linear, true}, bin{Strategy::Binary, true};
  auto l = run_chains(gf.field, lin, 1, additions, seed);
  auto b = run_chains(gf.field, bin, 1, additions, seed);
  if (l.finals != b.finals) throw Error("strategies disagree");
  return (b.cpu_ms / b.additions) / (l.cpu_ms / l.additions);
}

Outcome speedup_trend(bool perf) {
  std::ostringstream detail;
  std::vector<std::pair<int, double>> pts;
  for (auto [cf, adds] : std::vector<std::pair<int, int>>{{2, 400}, {10, 100}, {19, 60}}) {
    int g = 0;
    double r = time_ratio(cf, adds, 700 + cf, &g);
    pts.emplace_back(g, r);
    detail << "g=" << g << ": " << fmt(r, 2) << "  ";
  }
  bool ok = pts.back().second >= 1.8 && pts[0].second < pts[1].second && pts[1].second < pts.back().second * 1.05;
  detail << "(binary/linear time; need growth and >= 1.8 at g=55)";
  if (perf) {
    int g = 0;
    double r = time_ratio(34, 40, 734, &g);
    detail << "; g=" << g << ": " << fmt(r, 2) << " (need [2.0, 4.5])";
    ok = ok && r >= 2.0 && r <= 4.5;
  } else {
    detail << "; g=100 check skipped (run with --perf)";
  }
  return {ok, detail.str()};
}

Outcome cache_behavior() {
  int mismatches = 0;
  for (const auto& nf : corpus()) {
    auto on = run_chains(nf.field, {Strategy::Linear, true}, 2, 50, 808);
    auto off = run_chains(nf.field, {Strategy::Linear, false}, 2, 50, 808);
    auto bon = run_chains(nf.field, {Strategy::Binary, true}, 2, 50, 808);
    mismatches += on.finals != off.finals || on.finals != bon.finals;
  }
  auto g25 = gen_tang(kP, 3, 9, 25);
  auto st = run_chains(g25.field, {Strategy::Linear, true}, 5, 1000, 809);
  bool ok = mismatches == 0 && g25.genus == 25 && g25.t == 2 && st.infinite_cache_size <= 500 &&
            st.ssrr_cache_size <= 500;
  return {ok, "on/off mismatches: " + std::to_string(mismatches) + "; g=" + std::to_string(g25.genus) +
                  " t=" + std::to_string(g25.t) + " after " + std::to_string(st.additions) +
                  " additions: infinite cache " + std::to_string(st.infinite_cache_size) + ", SSRR cache " +
                  std::to_string(st.ssrr_cache_size) + " (need <= 500 each)"};
}

Outcome order_annihilation() {
  std::ostringstream detail;
  bool ok = true;
  struct Tiny {
    FieldPtr f;
    i64 expected;  // -1: whatever the zeta oracle says
  };
  std::vector<Tiny> tiny{{make(2, {{0, 0, 0, 1}, {1}}), 3}, {make(2, {{0, 0, 0, 0, 0, 1}, {1}}), -1},
                         {make(3, {{-1, 0, 0, 0, 0, -1}, {}}), -1}};
  for (const auto& t : tiny) {
    i64 h = jacobian_order(*t.f);
    JacobianCtx ctx(t.f);
    Rng rng(909);
    int bad = 0;
    for (int k = 0; k < 20; ++k) bad += !(ctx.scalar_mul(h, ctx.random_class(rng)) == ctx.zero());
    bool here = bad == 0 && t.f->genus() <= 2 && (t.expected < 0 || h == t.expected);
    ok = ok && here;
    detail << "F_" << t.f->p() << " g=" << t.f->genus() << " #Jac=" << h << (bad ? " FAIL" : "") << "; ";
  }
  detail << "20 random classes each";
  return {ok, detail.str()};
}

Outcome genus_correctness() {
  int g1 = make(7, {{-1, 0, 0, 0, 0, -1}, {}})->genus();
  int g2 = make(5, {{0, -1, 0, -1}, {}})->genus();
  auto t = gen_tang(kP, 3, 2, 1);
  bool ok = g1 == 2 && g2 == 1 && t.genus == 4 && t.bound_equality();
  return {ok, "y^2=x^5+1/F_7: " + std::to_string(g1) + ", y^2=x^3+x/F_5: " + std::to_string(g2) +
                  ", Tang(3,2): " + std::to_string(t.genus) + (t.bound_equality() ? " (bound equality)" : " (below bound)")};
}

}  // namespace

int main(int argc, char** argv) {
  bool perf = argc > 1 && std::strcmp(argv[1], "--perf") == 0;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"group axioms", group_axioms},
      {"uniqueness of representatives", uniqueness},
      {"reduction invariants", invariants},
      {"HR-Min oracle equivalence", oracle_equivalence},
      {"typical-case frequency", typical_frequency},
      {"counter claims", counter_claims},
      {"speedup trend", [perf] { return speedup_trend(perf); }},
      {"cache behavior", cache_behavior},
      {"tiny-field order annihilation", order_annihilation},
      {"genus correctness", genus_correctness},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    double t0 = thread_cpu_ms();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << " " << criteria[i].first << ": "
              << o.detail << "  [" << fmt((thread_cpu_ms() - t0) / 1000, 1) << "s]" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
