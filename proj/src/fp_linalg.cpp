#include "hessjac/fp_linalg.hpp"

#include <cassert>

namespace hessjac {

FpMatrix FpMatrix::identity(int n, u32 p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  assert(cols_ == o.rows_);
  FpMatrix r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      u64 a = (*this)(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = static_cast<u32>((r(i, j) + a * o(k, j)) % p_);
    }
  }
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  FpMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = Zp::sub(a_[i], o.a_[i], p_);
  return r;
}

std::vector<u32> FpMatrix::apply(const std::vector<u32>& v) const {
  std::vector<u32> r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    u64 acc = 0;
    for (int j = 0; j < cols_; ++j) acc = (acc + static_cast<u64>((*this)(i, j)) * v[j]) % p_;
    r[i] = static_cast<u32>(acc);
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(FpMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  u32 p = m.modulus();
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    }
    u32 inv = Zp::inv(m(r, c), p);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = Zp::mul(m(r, j), inv, p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !m(i, c)) continue;
      u32 f = Zp::neg(m(i, c), p);
      for (int j = 0; j < m.cols(); ++j) {
        if (m(r, j)) m(i, j) = static_cast<u32>((m(i, j) + static_cast<u64>(f) * m(r, j)) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<u32>> FpMatrix::kernel() const {
  FpMatrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_piv(cols_, false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<std::vector<u32>> out;
  for (int free = 0; free < cols_; ++free) {
    if (is_piv[free]) continue;
    std::vector<u32> v(cols_, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = Zp::neg(m(static_cast<int>(r), free), p_);
    out.push_back(std::move(v));
  }
  return out;
}

int FpMatrix::rank() const {
  FpMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<std::vector<u32>> span_basis(const std::vector<std::vector<u32>>& vs, int dim, u32 p) {
  FpMatrix m(static_cast<int>(vs.size()), dim, p);
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < dim; ++j) m(static_cast<int>(i), j) = vs[i][j];
  auto pivots = rref(m);
  std::vector<std::vector<u32>> out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<u32> v(dim);
    for (int j = 0; j < dim; ++j) v[j] = m(static_cast<int>(r), j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hessjac
