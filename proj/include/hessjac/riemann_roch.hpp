#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hessjac/divisor.hpp"

namespace hessjac {

struct RRResult {
  std::vector<FFElem> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Per-infinite-ideal part of the reduction matrix used by ssrr, keyed on the
/// canonical key of the infinite ideal. Not thread-safe; confine to one caller.
class SsrrCache {
 public:
  struct Entry {
    PolyMatrix left;  // maps finite lattice coordinates to infinite ones, up to x^shift
    int shift = 0;
  };

  /// max_entries == 0 means unbounded; when full, new entries are not stored.
  explicit SsrrCache(size_t max_entries = 0) : max_entries_(max_entries) {}

  const Entry& lookup(const FunctionField& field, const FractionalIdeal& infinite);
  size_t size() const { return map_.size(); }
  size_t hits() const { return hits_; }
  size_t misses() const { return misses_; }
  void clear() { map_.clear(); }

 private:
  size_t max_entries_;
  size_t hits_ = 0, misses_ = 0;
  std::unordered_map<std::string, Entry> map_;
  Entry scratch_;
};

/// Basis of L(D) where (finite, infinite) is the ideal pair of -D.
RRResult rr_basis(const FunctionField& field, const FractionalIdeal& finite, const FractionalIdeal& infinite);
RRResult rr_basis(const Divisor& d);
int rr_dimension(const Divisor& d);

/// A nonzero element of L(D), normalized, or nothing when L(D) = 0.
/// (finite, infinite) is the ideal pair of -D.
std::optional<FFElem> ssrr(const FunctionField& field, const FractionalIdeal& finite,
                           const FractionalIdeal& infinite, SsrrCache* cache = nullptr);
std::optional<FFElem> ssrr(const Divisor& d, SsrrCache* cache = nullptr);

}  // namespace hessjac
