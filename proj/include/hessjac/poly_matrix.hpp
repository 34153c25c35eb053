#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hessjac/poly.hpp"

namespace hessjac {

/// Dense matrix over F_p[x], row-major.
///
/// Lattices are written with basis vectors as *columns*. The Hermite normal
/// form used throughout is lower triangular: column j has zeros above row j,
/// monic diagonal H(j, j), and every entry H(i, j) with j < i has degree
/// strictly below deg H(i, i) (reduced modulo the diagonal entry of its row).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, u32 p);
  static PolyMatrix identity(int n, u32 p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  u32 modulus() const { return p_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Poly& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const = default;

  std::vector<Poly> column(int j) const;
  void set_column(int j, const std::vector<Poly>& v);
  PolyMatrix scale(const Poly& c) const;
  PolyMatrix transpose() const;
  /// Columns [first, first+count).
  PolyMatrix column_block(int first, int count) const;
  /// [this | o]
  PolyMatrix hconcat(const PolyMatrix& o) const;

  /// Max degree over all entries; -1 for the zero matrix.
  int max_deg() const;
  /// Column degree (max entry degree); -1 for a zero column.
  int column_deg(int j) const;
  bool is_lower_triangular() const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  u32 p_ = 0;
  std::vector<Poly> e_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Poly det(const PolyMatrix& m);

/// (d, R) with M * R = d * I and d = +-det(M) != 0; throws on singular input.
struct ScaledInverse {
  Poly d;
  PolyMatrix r;
};
ScaledInverse scaled_inverse(const PolyMatrix& m);

/// Hermite normal form of a square nonsingular matrix with the transform:
/// H = M * U, U unimodular. Throws "singular lattice basis".
struct HnfResult {
  PolyMatrix h, u;
};
HnfResult hnf(const PolyMatrix& m);

/// Hermite normal form of the full-rank lattice spanned by the columns of the
/// n x m generator matrix g, given a nonzero multiple `d` of the lattice
/// determinant (so that d * F_p[x]^n lies inside the lattice). Entries are kept
/// reduced modulo the running determinant, so degrees stay below deg(d).
PolyMatrix hnf_mod(PolyMatrix g, const Poly& d);

/// Column-reduced (weak Popov) form by simple column transformations.
struct ColumnReduction {
  PolyMatrix r;
  std::vector<int> degs;       ///< column degrees of r
  std::optional<int> stopped;  ///< column that triggered an early stop
};
/// Reduce the columns of `m`, applying the same column operations to
/// `companion` (which must have m.cols() columns) when it is non-null.
/// With `stop_at` set, returns as soon as some column degree <= *stop_at.
ColumnReduction column_reduce(PolyMatrix m, PolyMatrix* companion = nullptr,
                              std::optional<int> stop_at = std::nullopt);

}  // namespace hessjac
