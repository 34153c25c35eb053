#include "hessjac/fieldgen.hpp"

#include <json.hpp>

namespace hessjac {

std::string GeneratedField::metadata_json() const {
  nlohmann::ordered_json j;
  j["method"] = method;
  j["seed"] = seed;
  j["g"] = genus;
  j["n"] = field->n();
  j["cf"] = field->cf();
  j["t"] = t;
  j["genus_bound"] = genus_bound;
  j["bound_equality"] = bound_equality();
  j["attempts"] = attempts;
  return j.dump();
}

namespace {

// Random polynomial of degree exactly d.
Poly random_exact(u32 p, int d, Rng& rng) {
  Poly a = Poly::random(p, d, rng);
  while (a.deg() != d) a = Poly::random(p, d, rng);
  return a;
}

Poly random_below(u32 p, int d, Rng& rng) { return d <= 0 ? Poly(p) : Poly::random(p, d - 1, rng); }

int degree_one_infinite(const FunctionField& f) {
  int t = 0;
  for (const auto& pl : f.infinite_places()) t += pl->degree() == 1;
  return t;
}

FieldPtr try_make(u32 p, std::vector<Poly> coeffs) {
  try {
    if (!is_irreducible(coeffs)) return nullptr;
  } catch (const Error&) {
    return nullptr;  // inseparable or inconclusive
  }
  return FunctionField::make(p, std::move(coeffs));
}

Error exhausted(const char* method, u64 seed, int attempts) {
  return Error(std::string(method) + ": retry budget exhausted after " + std::to_string(attempts) +
               " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace

GeneratedField gen_tang(u32 p, int n, int cf, u64 seed, int max_attempts) {
  if (n < 2 || cf < 1) throw Error("tang: need n >= 2 and cf >= 1");
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Poly> a(n, Poly(p));
    a[n - 1] = random_exact(p, cf, rng);
    for (int i = 1; i < n - 1; ++i) a[i] = random_below(p, (n - i) * cf, rng);
    a[0] = random_exact(p, n * cf - 1, rng);
    auto f = try_make(p, a);
    if (!f) continue;
    int t = degree_one_infinite(*f);
    if (t != 2) continue;
    GeneratedField out;
    out.field = f;
    out.method = "tang";
    out.seed = seed;
    out.attempts = attempt;
    out.genus = f->genus();
    out.genus_bound = f->genus_bound();
    out.t = t;
    return out;
  }
  throw exhausted("tang", seed, max_attempts);
}

GeneratedField gen_adhoc(u32 p, int n, int cf_max, u64 seed, std::optional<int> target_genus, int max_attempts) {
  if (n < 2 || cf_max < 1) throw Error("adhoc: need n >= 2 and cf_max >= 1");
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    int cf = 1 + static_cast<int>(rng() % cf_max);
    // skip C_f values whose genus bound cannot reach the target
    if (target_genus && (cf * n - 2) * (n - 1) / 2 < *target_genus) continue;
    std::vector<Poly> a(n, Poly(p));
    int pinned = static_cast<int>(rng() % n);  // this coefficient realizes C_f
    for (int i = 0; i < n; ++i) {
      int top = (n - i) * cf;
      if (i == pinned) {
        a[i] = random_exact(p, top, rng);
      } else {
        int d = static_cast<int>(rng() % (top + 2)) - 1;
        a[i] = d < 0 ? Poly(p) : Poly::random(p, d, rng);
      }
    }
    if (compute_cf(a) > cf_max) continue;
    auto f = try_make(p, a);
    if (!f) continue;
    int t = degree_one_infinite(*f);
    if (t == 0) continue;
    if (target_genus && f->genus() != *target_genus) continue;
    GeneratedField out;
    out.field = f;
    out.method = "adhoc";
    out.seed = seed;
    out.attempts = attempt;
    out.genus = f->genus();
    out.genus_bound = f->genus_bound();
    out.t = t;
    return out;
  }
  throw exhausted("adhoc", seed, max_attempts);
}

}  // namespace hessjac
