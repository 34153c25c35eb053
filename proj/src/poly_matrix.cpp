#include "hessjac/poly_matrix.hpp"

#include <cassert>
#include <sstream>

namespace hessjac {

PolyMatrix::PolyMatrix(int rows, int cols, u32 p)
    : rows_(rows), cols_(cols), p_(p), e_(static_cast<size_t>(rows) * cols, Poly(p)) {}

PolyMatrix PolyMatrix::identity(int n, u32 p) {
  PolyMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(p, 1);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  assert(cols_ == o.rows_);
  PolyMatrix r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Poly& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  PolyMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

std::vector<Poly> PolyMatrix::column(int j) const {
  std::vector<Poly> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void PolyMatrix::set_column(int j, const std::vector<Poly>& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

PolyMatrix PolyMatrix::scale(const Poly& c) const {
  PolyMatrix r = *this;
  for (auto& e : r.e_) e *= c;
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

PolyMatrix PolyMatrix::column_block(int first, int count) const {
  PolyMatrix r(rows_, count, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& o) const {
  assert(rows_ == o.rows_);
  PolyMatrix r(rows_, cols_ + o.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

int PolyMatrix::max_deg() const {
  int d = -1;
  for (const auto& e : e_) d = std::max(d, e.deg());
  return d;
}

int PolyMatrix::column_deg(int j) const {
  int d = -1;
  for (int i = 0; i < rows_; ++i) d = std::max(d, (*this)(i, j).deg());
  return d;
}

bool PolyMatrix::is_lower_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]\n";
  }
  return os.str();
}

Poly det(const PolyMatrix& m) {
  assert(m.is_square());
  int n = m.rows();
  u32 p = m.modulus();
  PolyMatrix a = m;
  Poly prev = Poly::constant(p, 1);
  bool neg = false;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (!a(r, k).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Poly(p);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Poly(p);
    }
    prev = a(k, k);
  }
  return neg ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

ScaledInverse scaled_inverse(const PolyMatrix& m) {
  assert(m.is_square());
  int n = m.rows();
  u32 p = m.modulus();
  // fraction-free Gauss-Jordan on [M | I]
  PolyMatrix a = m.hconcat(PolyMatrix::identity(n, p));
  Poly prev = Poly::constant(p, 1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (!a(r, k).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw Error("singular lattice basis");
    if (piv != k) {
      for (int j = 0; j < 2 * n; ++j) std::swap(a(k, j), a(piv, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      Poly aik = a(i, k);
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = (a(k, k) * a(i, j) - aik * a(k, j)) / prev;
      }
      a(i, k) = Poly(p);
    }
    prev = a(k, k);
  }
  // left block is now prev * I
  return {prev, a.column_block(n, n)};
}

namespace {

// c_j <- c_j - q * c_k on columns of m (rows from `from`)
void col_axpy(PolyMatrix& m, int j, int k, const Poly& q, int from = 0) {
  for (int i = from; i < m.rows(); ++i) {
    if (!m(i, k).is_zero()) m(i, j) -= q * m(i, k);
  }
}

// Euclidean combination so that column k holds gcd at row i and column j has zero there.
void euclid_cols(PolyMatrix& h, PolyMatrix* u, int i, int k, int j) {
  Xgcd e = xgcd(h(i, k), h(i, j));
  Poly a = h(i, k) / e.g, b = h(i, j) / e.g;
  auto combine = [&](PolyMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
      Poly ck = m(r, k), cj = m(r, j);
      m(r, k) = e.s * ck + e.t * cj;
      m(r, j) = a * cj - b * ck;
    }
  };
  combine(h);
  if (u) combine(*u);
}

}  // namespace

HnfResult hnf(const PolyMatrix& m) {
  if (!m.is_square()) throw Error("hnf expects a square matrix");
  int n = m.rows();
  u32 p = m.modulus();
  PolyMatrix h = m, u = PolyMatrix::identity(n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (h(i, j).is_zero()) continue;
      if (h(i, i).is_zero()) {
        for (int r = 0; r < n; ++r) {
          std::swap(h(r, i), h(r, j));
          std::swap(u(r, i), u(r, j));
        }
        continue;
      }
      euclid_cols(h, &u, i, i, j);
    }
    if (h(i, i).is_zero()) throw Error("singular lattice basis");
    u32 inv = Zp::inv(h(i, i).lc(), p);
    if (inv != 1) {
      for (int r = 0; r < n; ++r) {
        h(r, i) = h(r, i).scale(inv);
        u(r, i) = u(r, i).scale(inv);
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      Poly q = h(i, j) / h(i, i);
      if (q.is_zero()) continue;
      col_axpy(h, j, i, q, i);
      col_axpy(u, j, i, q);
    }
  }
  return {std::move(h), std::move(u)};
}

PolyMatrix hnf_mod(PolyMatrix a, const Poly& d) {
  int n = a.rows(), m = a.cols();
  u32 p = a.modulus();
  if (d.is_zero()) throw Error("singular lattice basis");
  Poly r = d.monic();
  auto reduce_col = [&](int j, int from) {
    for (int i = from; i < n; ++i) {
      if (a(i, j).deg() >= r.deg()) a(i, j) = a(i, j) % r;
    }
  };
  for (int j = 0; j < m; ++j) reduce_col(j, 0);
  std::vector<bool> active(m, true);
  PolyMatrix w(n, n, p);
  for (int i = 0; i < n; ++i) {
    // pivot on the lowest-degree entry of the row so that gcd steps stay cheap
    int k = -1;
    for (int j = 0; j < m; ++j)
      if (active[j] && !a(i, j).is_zero() && (k < 0 || a(i, j).deg() < a(i, k).deg())) k = j;
    for (int j = 0; j < m && k >= 0; ++j) {
      if (j == k || !active[j] || a(i, j).is_zero()) continue;
      if (a(i, k).deg() == 0) {
        Poly q = a(i, j) * Poly::constant(p, Zp::inv(a(i, k).lc(), p));
        col_axpy(a, j, k, q, i);
        reduce_col(j, i);
        continue;
      }
      Xgcd e = xgcd(a(i, k), a(i, j));
      Poly qa = a(i, k) / e.g, qb = a(i, j) / e.g;
      for (int rr = i; rr < n; ++rr) {
        Poly ck = a(rr, k), cj = a(rr, j);
        a(rr, k) = e.s * ck + e.t * cj;
        a(rr, j) = qa * cj - qb * ck;
      }
      reduce_col(k, i);
      reduce_col(j, i);
    }
    Poly piv = k >= 0 ? a(i, k) : Poly(p);
    Poly dd;
    if (piv.is_zero()) {
      dd = r;
      w(i, i) = r;
    } else {
      Xgcd e = xgcd(piv, r);
      dd = e.g;
      for (int rr = i; rr < n; ++rr) w(rr, i) = (e.s * a(rr, k)) % r;
      w(i, i) = dd;
      if (dd == r) w(i, i) = r;
      active[k] = false;
    }
    for (int j = 0; j < i; ++j) {
      Poly q = w(i, j) / w(i, i);
      if (!q.is_zero()) col_axpy(w, j, i, q, i);
    }
    r = r / dd;
  }
  return w;
}

ColumnReduction column_reduce(PolyMatrix m, PolyMatrix* companion, std::optional<int> stop_at) {
  int n = m.cols();
  int rows = m.rows();
  std::vector<int> deg(n), piv(n);
  auto refresh = [&](int j) {
    deg[j] = -1;
    piv[j] = -1;
    for (int i = 0; i < rows; ++i) {
      int d = m(i, j).deg();
      if (d >= deg[j] && d >= 0) {
        deg[j] = d;
        piv[j] = i;
      }
    }
    if (deg[j] < 0) throw Error("singular lattice basis");
  };
  for (int j = 0; j < n; ++j) refresh(j);
  ColumnReduction out;
  auto check_stop = [&](int j) {
    if (stop_at && deg[j] <= *stop_at) {
      out.stopped = j;
      return true;
    }
    return false;
  };
  bool done = false;
  for (int j = 0; j < n && !done; ++j) done = check_stop(j);
  std::vector<int> owner(rows);
  while (!done) {
    std::fill(owner.begin(), owner.end(), -1);
    int ja = -1, jb = -1;
    for (int j = 0; j < n; ++j) {
      int o = owner[piv[j]];
      if (o < 0) {
        owner[piv[j]] = j;
        continue;
      }
      // reduce the column of larger degree (ties: the later one)
      if (deg[j] >= deg[o]) {
        ja = j;
        jb = o;
      } else {
        ja = o;
        jb = j;
      }
      break;
    }
    if (ja < 0) break;
    u32 p = m.modulus();
    int row = piv[ja];
    u32 c = Zp::mul(m(row, ja).lc(), Zp::inv(m(row, jb).lc(), p), p);
    Poly q = Poly::monomial(p, c, deg[ja] - deg[jb]);
    col_axpy(m, ja, jb, q);
    if (companion) col_axpy(*companion, ja, jb, q);
    refresh(ja);
    done = check_stop(ja);
  }
  out.degs = deg;
  out.r = std::move(m);
  return out;
}

}  // namespace hessjac
