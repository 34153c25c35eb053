#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hessjac/fieldgen.hpp"
#include "hessjac/jacobian.hpp"

namespace hessjac {

struct BenchConfig {
  Strategy strategy = Strategy::Linear;
  bool caching = true;

  /// "linear_no_caching", "binary_caching", ...
  std::string name() const;
};

/// The four configurations in column order.
std::vector<BenchConfig> all_configs();

struct ChainStats {
  double cpu_ms = 0;  // thread CPU time spent in additions
  u64 additions = 0;
  OpCounters counters;
  size_t infinite_cache_size = 0;
  size_t ssrr_cache_size = 0;
  /// Keys of the last element of every chain, for cross-configuration checks.
  std::vector<std::string> finals;
};

/// Fibonacci-style chains D_{k+1} = D_k + D_{k-1} from two random reduced
/// seeds, on one fresh context. Seeds depend only on (seed, chain index).
ChainStats run_chains(const FieldPtr& field, const BenchConfig& cfg, int chains, int length, u64 seed);

double thread_cpu_ms();

struct Sweep {
  std::string name;
  std::string axis;    // "genus" or "degree"
  std::string method;  // "tang" or "adhoc"
  u32 p = 32771;
  int n = 3;                // tang: fixed degree
  int genus = 15;           // adhoc: target genus
  int cf_max = 6;           // adhoc
  std::vector<int> points;  // tang: C_f values; adhoc: degrees n
  int fields = 5;
  int chains = 5;
  int chain_length = 1000;
};

/// fig1, fig2, fig1-small, fig2-small. Throws on unknown names.
Sweep preset(const std::string& name);
std::vector<std::string> preset_names();

struct BenchRow {
  int x = 0;
  int genus = 0;
  std::vector<std::optional<ChainStats>> per_config;  // indexed like all_configs()
};

struct BenchOptions {
  std::vector<BenchConfig> configs = all_configs();
  u64 seed = 1;
  int parallel_fields = 1;
  /// Called after each finished point.
  std::function<void(const BenchRow&)> progress;
};

/// Field i of a point uses generator seed  seed * 1000003 + 1000 * x + i.
std::vector<GeneratedField> sweep_fields(const Sweep& s, int x, u64 seed);

std::vector<BenchRow> run_sweep(const Sweep& s, const BenchOptions& opts);

/// '#' header (seed, sweep, version), one header row, numeric rows.
void write_dat(std::ostream& out, const Sweep& s, const BenchOptions& opts, const std::vector<BenchRow>& rows);

}  // namespace hessjac
