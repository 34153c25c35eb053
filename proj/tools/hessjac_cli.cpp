// hessjac: field generation, benchmark sweeps, self-test and reduction.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hessjac/bench.hpp"
#include "hessjac/oracles.hpp"
#include "hessjac/poly_factor.hpp"

using namespace hessjac;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string method = "tang";
  u32 p = 32771;
  int n = 3;
  int cf = 2;
  int cf_max = 6;
  int genus = -1;
  int count = 1;
  u64 seed = 1;
  std::string out = ".";
};

int cmd_gen(const GenArgs& a) {
  if (a.method != "tang" && a.method != "adhoc") throw UsageError("--method must be tang or adhoc");
  if (!is_prime_u32(a.p)) throw UsageError("--p must be prime");
  std::filesystem::create_directories(a.out);
  for (int i = 0; i < a.count; ++i) {
    u64 s = a.seed + i;
    GeneratedField g = a.method == "tang"
                           ? gen_tang(a.p, a.n, a.cf, s)
                           : gen_adhoc(a.p, a.n, a.cf_max, s, a.genus >= 0 ? std::optional<int>(a.genus) : std::nullopt);
    std::ostringstream name;
    name << a.method << "_p" << a.p << "_n" << a.n << "_cf" << g.field->cf() << "_g" << g.genus << "_s" << s
         << ".json";
    auto path = std::filesystem::path(a.out) / name.str();
    g.field->save(path.string(), g.metadata_json());
    std::cout << path.string() << "  g=" << g.genus << " bound=" << g.genus_bound
              << (g.bound_equality() ? "" : "  (genus below bound)") << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string preset = "fig1-small";
  std::string strategy = "both";
  std::string cache = "both";
  int chains = -1, chain_length = -1, fields = -1;
  std::vector<int> points;
  u64 seed = 1;
  std::string out;
  int parallel_fields = 1;
};

int cmd_bench(const BenchArgs& a) {
  Sweep s;
  try {
    s = preset(a.preset);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (a.chains >= 0) s.chains = a.chains;
  if (a.chain_length >= 0) s.chain_length = a.chain_length;
  if (a.fields >= 0) s.fields = a.fields;
  if (!a.points.empty()) s.points = a.points;
  if (s.chains < 1 || s.chain_length < 1 || s.fields < 1) throw UsageError("chains, chain length and fields must be positive");
  for (int x : s.points)
    if (x < (s.axis == "degree" ? 2 : 1)) throw UsageError("invalid sweep point " + std::to_string(x));
  BenchOptions opts;
  opts.seed = a.seed;
  opts.parallel_fields = a.parallel_fields;
  opts.configs.clear();
  for (const auto& c : all_configs()) {
    bool st = a.strategy == "both" || (a.strategy == "linear") == (c.strategy == Strategy::Linear);
    bool ca = a.cache == "both" || (a.cache == "on") == c.caching;
    if (st && ca) opts.configs.push_back(c);
  }
  opts.progress = [&](const BenchRow& r) {
    std::cerr << s.axis << " " << (s.axis == "genus" ? r.genus : r.x) << " done\n";
  };
  auto rows = run_sweep(s, opts);
  if (a.out.empty()) {
    write_dat(std::cout, s, opts, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error("cannot write " + a.out);
    write_dat(f, s, opts, rows);
  }
  return 0;
}

// ---------------------------------------------------------------- selftest

struct Report {
  int failures = 0;
  void line(const std::string& what, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    failures += !ok;
  }
};

Divisor random_degree_zero(JacobianCtx& ctx, Rng& rng, int terms) {
  const auto& f = ctx.field();
  u32 p = f->p();
  Divisor d(f);
  for (int t = 0; t < terms; ++t) {
    int deg = 1 + static_cast<int>(rng() % 2);
    Poly q = Poly::random(p, deg, rng, true);
    if (!is_irreducible(q)) continue;
    const auto& pls = f->places_above(q);
    d.add_term(pls[rng() % pls.size()], static_cast<int>(rng() % 5) - 2);
  }
  return d + Divisor::of_place(f, ctx.base_place(), -d.degree());
}

void selftest_field(Report& rep, const std::string& label, const FieldPtr& f, bool full) {
  JacobianOptions vo;
  vo.verify = true;
  JacobianCtx ctx(f, vo);
  JacobianOptions bo;
  bo.strategy = Strategy::Binary;
  bo.caching = false;
  JacobianCtx alt(f, bo);
  Rng rng(f->p() + 17);
  bool axioms = true, unique = true, strategies = true, oracle = true;
  for (int t = 0; t < 10; ++t) {
    auto d1 = random_degree_zero(ctx, rng, 3), d2 = random_degree_zero(ctx, rng, 3), d3 = random_degree_zero(ctx, rng, 3);
    auto a = ctx.reduce(d1), b = ctx.reduce(d2), c = ctx.reduce(d3);
    axioms = axioms && ctx.add(a, ctx.zero()) == a && ctx.add(a, ctx.neg(a)) == ctx.zero() &&
             ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)) && ctx.add(a, b) == ctx.add(b, a);
    auto h = f->random_element(rng, 2);
    if (!h.is_zero()) unique = unique && ctx.reduce(d1 + principal_divisor(f, h)) == a;
    strategies = strategies && alt.reduce(d1) == a && alt.add(a, b) == ctx.add(a, b);
    if (full) {
      auto br = brute_hr_min(ctx, d1);
      oracle = oracle && ctx.hr_min_linear(d1).r == br.r && ctx.hr_min_binary(d1).r == br.r;
    }
  }
  rep.line(label + ": group axioms", axioms);
  rep.line(label + ": uniqueness under principal shifts", unique);
  rep.line(label + ": strategies and caching agree", strategies);
  if (full) rep.line(label + ": HR-Min matches brute force", oracle);
}

int cmd_selftest(const std::string& level) {
  if (level != "quick" && level != "full") throw UsageError("--level must be quick or full");
  bool full = level == "full";
  Report rep;
  auto mk = [](u32 p, std::vector<std::vector<i64>> c) {
    std::vector<Poly> a;
    for (auto& v : c) a.push_back(Poly::from_ints(p, v));
    return FunctionField::make(p, std::move(a));
  };
  try {
    auto h7 = mk(7, {{-1, 0, 0, 0, 0, -1}, {}});
    auto e5 = mk(5, {{0, -1, 0, -1}, {}});
    auto t4 = gen_tang(32771, 3, 2, 1).field;
    rep.line("genus of y^2 = x^5 + 1 over F_7 is 2", h7->genus() == 2);
    rep.line("genus of y^2 = x^3 + x over F_5 is 1", e5->genus() == 1);
    rep.line("genus of a Tang field with n = 3, C_f = 2 is 4", t4->genus() == 4);
    selftest_field(rep, "y^2 = x^5 + 1 / F_7", h7, full);
    selftest_field(rep, "y^2 = x^3 + x / F_5", e5, full);
    selftest_field(rep, "Tang g = 4 / F_32771", t4, full);
    if (full) {
      for (auto f : {mk(2, {{0, 0, 0, 1}, {1}}), mk(2, {{0, 0, 0, 0, 0, 1}, {1}}), mk(3, {{-1, 0, 0, 0, 0, -1}, {}})}) {
        i64 h = jacobian_order(*f);
        JacobianCtx ctx(f);
        Rng rng(h);
        bool ok = true;
        for (int t = 0; t < 10; ++t) ok = ok && ctx.scalar_mul(h, ctx.random_class(rng)) == ctx.zero();
        rep.line("order " + std::to_string(h) + " annihilates " + f->defpoly_str() + " over F_" + std::to_string(f->p()),
                 ok);
      }
    }
  } catch (const std::exception& e) {
    rep.line(std::string("exception: ") + e.what(), false);
  }
  std::cout << (rep.failures ? "selftest FAILED (" + std::to_string(rep.failures) + ")" : std::string("selftest ok"))
            << "\n";
  return rep.failures ? 1 : 0;
}

// ---------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string field;
  std::string divisor;
  std::string strategy = "linear";
  i64 random_seed = -1;
  bool json = false;
};

std::string read_arg_or_file(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream f(s.substr(1));
  if (!f) throw Error("cannot read " + s.substr(1));
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_reduce(const ReduceArgs& a) {
  if (a.strategy != "linear" && a.strategy != "binary") throw UsageError("--strategy must be linear or binary");
  auto f = FunctionField::load(a.field);
  JacobianOptions o;
  o.strategy = a.strategy == "linear" ? Strategy::Linear : Strategy::Binary;
  o.verify = true;
  JacobianCtx ctx(f, o);
  ReducedClassRep c;
  if (a.random_seed >= 0) {
    Rng rng(static_cast<u64>(a.random_seed));
    c = ctx.random_class(rng);
  } else {
    Divisor d = a.divisor.empty() ? Divisor(f) : Divisor::from_json(f, read_arg_or_file(a.divisor));
    c = ctx.reduce(d);
  }
  auto dt = ctx.dtilde(c);
  if (a.json) {
    nlohmann::ordered_json j;
    j["r"] = c.r;
    j["base_place"] = ctx.base_place()->key();
    j["dtilde"] = nlohmann::json::parse(dt.to_json());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "field  " << f->defpoly_str() << " over F_" << f->p() << ", g = " << ctx.genus() << "\n";
    std::cout << "A      " << ctx.base_place()->key() << "\n";
    std::cout << "r=" << c.r << "\n";
    std::cout << "D~     " << dt.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian arithmetic with Hess-reduced divisors"};
  app.set_version_flag("--version", HESSJAC_VERSION);
  app.require_subcommand(1);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate function fields");
  gen->add_option("--method", ga.method, "tang or adhoc")->capture_default_str();
  gen->add_option("--p", ga.p, "prime")->capture_default_str();
  gen->add_option("--n", ga.n, "degree in y")->capture_default_str();
  gen->add_option("--cf", ga.cf, "C_f (tang)")->capture_default_str();
  gen->add_option("--cf-max", ga.cf_max, "largest C_f (adhoc)")->capture_default_str();
  gen->add_option("--genus", ga.genus, "target genus (adhoc)");
  gen->add_option("--count", ga.count, "number of fields")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--seed", ga.seed, "first seed")->capture_default_str();
  gen->add_option("--out", ga.out, "output directory")->capture_default_str();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "benchmark sweeps");
  bench->add_option("--preset", ba.preset, "fig1, fig2, fig1-small or fig2-small")->capture_default_str();
  bench->add_option("--strategy", ba.strategy, "linear, binary or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"linear", "binary", "both"}));
  bench->add_option("--cache", ba.cache, "on, off or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"on", "off", "both"}));
  bench->add_option("--chains", ba.chains, "addition chains per field (preset default)");
  bench->add_option("--chain-length", ba.chain_length, "additions per chain (preset default)");
  bench->add_option("--fields", ba.fields, "fields per sweep point (preset default)");
  bench->add_option("--points", ba.points, "override sweep points (C_f values or degrees)")->delimiter(',');
  bench->add_option("--seed", ba.seed, "seed")->capture_default_str();
  bench->add_option("--out", ba.out, "dat file (default stdout)");
  bench->add_option("--parallel-fields", ba.parallel_fields, "fields processed concurrently")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string level = "quick";
  auto* self = app.add_subcommand("selftest", "property checks on small fields");
  self->add_option("--level", level, "quick or full")->capture_default_str();

  ReduceArgs ra;
  auto* red = app.add_subcommand("reduce", "reduce a degree-zero divisor");
  red->add_option("--field", ra.field, "field file")->required();
  red->add_option("--divisor", ra.divisor, "divisor JSON, or @file (default: zero)");
  red->add_option("--random", ra.random_seed, "reduce a random class with this seed instead");
  red->add_option("--strategy", ra.strategy, "linear or binary")->capture_default_str();
  red->add_flag("--json", ra.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*gen) return cmd_gen(ga);
    if (*bench) return cmd_bench(ba);
    if (*self) return cmd_selftest(level);
    if (*red) return cmd_reduce(ra);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
