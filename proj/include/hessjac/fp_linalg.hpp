#pragma once

#include <vector>

#include "hessjac/prime_field.hpp"

namespace hessjac {

/// Dense matrix over F_p; used for residue-algebra computations
/// (radicals, Berlekamp subalgebras, idempotents).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, u32 p) : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {}
  static FpMatrix identity(int n, u32 p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  u32 modulus() const { return p_; }
  u32& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  u32 operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  std::vector<u32> apply(const std::vector<u32>& v) const;

  /// Basis of the right null space {v : M v = 0}, one vector per entry.
  std::vector<std::vector<u32>> kernel() const;
  int rank() const;

 private:
  int rows_ = 0, cols_ = 0;
  u32 p_ = 0;
  std::vector<u32> a_;
};

/// Row-reduced basis of span(vs) (dimension `dim` vectors). Deterministic.
std::vector<std::vector<u32>> span_basis(const std::vector<std::vector<u32>>& vs, int dim, u32 p);

}  // namespace hessjac
