#pragma once

#include <optional>
#include <string>

#include "hessjac/function_field.hpp"

namespace hessjac {

struct GeneratedField {
  FieldPtr field;
  std::string method;
  u64 seed = 0;
  int attempts = 0;
  int genus = 0;
  int genus_bound = 0;
  /// Number of infinite places of degree one.
  int t = 0;

  bool bound_equality() const { return genus == genus_bound; }
  /// {"method", "seed", "g", "n", "cf", "t", "genus_bound", "bound_equality", "attempts"}
  std::string metadata_json() const;
};

/// deg a_{n-1} = cf, deg a_i < (n - i) cf for 0 < i < n - 1, deg a_0 = n cf - 1.
/// Retries until irreducible with two degree-one infinite places.
GeneratedField gen_tang(u32 p, int n, int cf, u64 seed, int max_attempts = 1000);

/// Random monic polynomial with C_f <= cf_max, irreducible, with a degree-one
/// infinite place; with target_genus, rejection-samples until the genus matches.
GeneratedField gen_adhoc(u32 p, int n, int cf_max, u64 seed, std::optional<int> target_genus = std::nullopt,
                         int max_attempts = 20000);

}  // namespace hessjac
