#include "hessjac/bench.hpp"

#include <time.h>

#include <algorithm>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef HESSJAC_VERSION
#define HESSJAC_VERSION "unknown"
#endif

namespace hessjac {

std::string BenchConfig::name() const {
  return std::string(strategy == Strategy::Linear ? "linear" : "binary") + (caching ? "_caching" : "_no_caching");
}

std::vector<BenchConfig> all_configs() {
  return {{Strategy::Linear, false}, {Strategy::Linear, true}, {Strategy::Binary, false}, {Strategy::Binary, true}};
}

double thread_cpu_ms() {
  timespec ts;
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return ts.tv_sec * 1e3 + ts.tv_nsec / 1e6;
}

ChainStats run_chains(const FieldPtr& field, const BenchConfig& cfg, int chains, int length, u64 seed) {
  JacobianOptions o;
  o.strategy = cfg.strategy;
  o.caching = cfg.caching;
  JacobianCtx ctx(field, o);
  ChainStats st;
  OpCounters total;
  for (int c = 0; c < chains; ++c) {
    Rng rng(seed * 7919 + c);
    auto a = ctx.random_class(rng);
    auto b = ctx.random_class(rng);
    ctx.reset_counters();
    double t0 = thread_cpu_ms();
    for (int k = 0; k < length; ++k) {
      auto s = ctx.add(b, a);
      a = std::move(b);
      b = std::move(s);
    }
    st.cpu_ms += thread_cpu_ms() - t0;
    st.additions += length;
    auto k = ctx.counters();
    total.ssrr_calls += k.ssrr_calls;
    total.partial_additions += k.partial_additions;
    total.infinite_cache_hits += k.infinite_cache_hits;
    total.infinite_cache_misses += k.infinite_cache_misses;
    total.ssrr_cache_hits += k.ssrr_cache_hits;
    total.ssrr_cache_misses += k.ssrr_cache_misses;
    st.finals.push_back(b.key());
  }
  st.counters = total;
  st.infinite_cache_size = ctx.infinite_cache_size();
  st.ssrr_cache_size = ctx.ssrr_cache_size();
  return st;
}

Sweep preset(const std::string& name) {
  Sweep s;
  s.name = name;
  if (name == "fig1" || name == "fig1-small") {
    s.axis = "genus";
    s.method = "tang";
    s.n = 3;
    if (name == "fig1") {
      for (int cf = 2; cf <= 19; ++cf) s.points.push_back(cf);
    } else {
      s.points = {2, 3, 4};
      s.fields = 2;
      s.chains = 2;
      s.chain_length = 20;
    }
    return s;
  }
  if (name == "fig2" || name == "fig2-small") {
    s.axis = "degree";
    s.method = "adhoc";
    s.genus = 15;
    s.cf_max = 6;
    if (name == "fig2") {
      s.points = {3, 4, 5, 6, 7, 8};
    } else {
      s.points = {3, 4};
      s.fields = 1;
      s.chains = 2;
      s.chain_length = 20;
    }
    return s;
  }
  throw Error("unknown preset: " + name);
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig1-small", "fig2-small"}; }

std::vector<GeneratedField> sweep_fields(const Sweep& s, int x, u64 seed) {
  std::vector<GeneratedField> out;
  for (int i = 0; i < s.fields; ++i) {
    u64 fs = seed * 1000003 + 1000 * static_cast<u64>(x) + i;
    if (s.method == "tang")
      out.push_back(gen_tang(s.p, s.n, x, fs));
    else
      out.push_back(gen_adhoc(s.p, x, s.cf_max, fs, s.genus));
  }
  return out;
}

namespace {

void merge(ChainStats& into, const ChainStats& st) {
  into.cpu_ms += st.cpu_ms;
  into.additions += st.additions;
  into.counters.ssrr_calls += st.counters.ssrr_calls;
  into.counters.partial_additions += st.counters.partial_additions;
  into.counters.infinite_cache_hits += st.counters.infinite_cache_hits;
  into.counters.infinite_cache_misses += st.counters.infinite_cache_misses;
  into.counters.ssrr_cache_hits += st.counters.ssrr_cache_hits;
  into.counters.ssrr_cache_misses += st.counters.ssrr_cache_misses;
  into.infinite_cache_size = std::max(into.infinite_cache_size, st.infinite_cache_size);
  into.ssrr_cache_size = std::max(into.ssrr_cache_size, st.ssrr_cache_size);
  into.finals.insert(into.finals.end(), st.finals.begin(), st.finals.end());
}

}  // namespace

std::vector<BenchRow> run_sweep(const Sweep& s, const BenchOptions& opts) {
  auto configs = all_configs();
  std::vector<BenchRow> rows;
  for (int x : s.points) {
    auto fields = sweep_fields(s, x, opts.seed);
    BenchRow row;
    row.x = x;
    row.genus = fields.front().genus;
    row.per_config.resize(configs.size());
    // one task per field; configurations of a field run sequentially
    auto task = [&](size_t fi) {
      std::vector<std::optional<ChainStats>> res(configs.size());
      for (size_t c = 0; c < configs.size(); ++c) {
        bool wanted = std::any_of(opts.configs.begin(), opts.configs.end(), [&](const BenchConfig& w) {
          return w.strategy == configs[c].strategy && w.caching == configs[c].caching;
        });
        if (wanted) res[c] = run_chains(fields[fi].field, configs[c], s.chains, s.chain_length, opts.seed + fi);
      }
      return res;
    };
    std::vector<std::vector<std::optional<ChainStats>>> per_field(fields.size());
    size_t width = static_cast<size_t>(std::max(1, opts.parallel_fields));
    for (size_t start = 0; start < fields.size(); start += width) {
      std::vector<std::future<std::vector<std::optional<ChainStats>>>> futs;
      for (size_t fi = start; fi < std::min(fields.size(), start + width); ++fi)
        futs.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, task, fi));
      for (size_t k = 0; k < futs.size(); ++k) per_field[start + k] = futs[k].get();
    }
    for (const auto& pf : per_field)
      for (size_t c = 0; c < configs.size(); ++c) {
        if (!pf[c]) continue;
        if (!row.per_config[c]) row.per_config[c] = ChainStats{};
        merge(*row.per_config[c], *pf[c]);
      }
    // every configuration must land on the same group elements
    const std::vector<std::string>* ref = nullptr;
    for (const auto& pc : row.per_config) {
      if (!pc) continue;
      if (ref && pc->finals != *ref) throw Error("benchmark configurations disagree on chain results");
      ref = &pc->finals;
    }
    if (opts.progress) opts.progress(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_dat(std::ostream& out, const Sweep& s, const BenchOptions& opts, const std::vector<BenchRow>& rows) {
  auto configs = all_configs();
  out << "# hessjac " << HESSJAC_VERSION << "\n";
  out << "# preset " << s.name << " axis " << s.axis << " method " << s.method << " p " << s.p;
  if (s.method == "tang")
    out << " n " << s.n << " cf";
  else
    out << " genus " << s.genus << " cf_max " << s.cf_max << " n";
  for (size_t i = 0; i < s.points.size(); ++i) out << (i ? "," : " ") << s.points[i];
  out << "\n# seed " << opts.seed << " fields " << s.fields << " chains " << s.chains << " chain_length "
      << s.chain_length << "\n";
  out << "# cpu time per addition in milliseconds; *_ssrr_calls_mean is SSRR calls per addition\n";
  out << s.axis;
  for (const auto& c : configs) out << " " << c.name() << "_milliseconds_per_addition";
  for (const auto& c : configs) out << " " << c.name() << "_ssrr_calls_mean";
  out << "\n";
  for (const auto& r : rows) {
    out << (s.axis == "genus" ? r.genus : r.x);
    for (const auto& pc : r.per_config) {
      out << " ";
      if (pc)
        out << std::fixed << std::setprecision(4) << pc->cpu_ms / pc->additions << std::defaultfloat;
      else
        out << "nan";
    }
    for (const auto& pc : r.per_config) {
      out << " ";
      if (pc)
        out << std::fixed << std::setprecision(4) << static_cast<double>(pc->counters.ssrr_calls) / pc->additions
            << std::defaultfloat;
      else
        out << "nan";
    }
    out << "\n";
  }
}

}  // namespace hessjac
