#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hessjac/fp_linalg.hpp"
#include "hessjac/poly_matrix.hpp"

namespace hessjac {

enum class Side : int { Finite = 0, Infinite = 1 };

/// Vector over F_p(z) with a common denominator: num / den.
/// Normalized form: den monic and gcd(den, num...) = 1; the zero vector has den = 1.
struct PolyVec {
  std::vector<Poly> num;
  Poly den;

  static PolyVec integral(std::vector<Poly> num);
  void normalize();
  bool is_zero() const;
  bool operator==(const PolyVec& o) const { return num == o.num && den == o.den; }
};

/// Product of two elements in the power basis 1, t, ..., t^(n-1) of
/// F_p[z][t]/(t^n + a_{n-1} t^(n-1) + ... + a_0).
std::vector<Poly> power_basis_mul(const std::vector<Poly>& a, const std::vector<Poly>& b,
                                  const std::vector<Poly>& defpoly);

/// Tr(t^k) for 0 <= k < count (Newton sums).
std::vector<Poly> power_traces(const std::vector<Poly>& defpoly, int count);

/// det(Tr(t^(i+j))), the discriminant of the equation order.
Poly defpoly_discriminant(const std::vector<Poly>& defpoly);

/// An order of F over F_p[z], free of rank n, given by a basis
/// omega_j = (sum_i basis(i, j) t^i) / denom in the power basis of its
/// presentation (t = y over F_p[x], or t = y / x^cf over F_p[u], u = 1/x).
///
/// When `local_prime` is set the order is only used locally at that prime and
/// all ideals built on it are localized there.
class Order {
 public:
  /// The equation order F_p[z][t].
  Order(u32 p, std::vector<Poly> defpoly, Side side, std::optional<Poly> local_prime = std::nullopt);
  /// Same presentation, new basis.
  Order(const Order& presentation, PolyMatrix basis, Poly denom);

  u32 modulus() const { return p_; }
  int degree() const { return n_; }
  Side side() const { return side_; }
  const std::optional<Poly>& local_prime() const { return local_; }
  const std::vector<Poly>& defpoly() const { return defpoly_; }
  const PolyMatrix& basis() const { return basis_; }
  const Poly& denom() const { return denom_; }

  /// Coordinates of 1.
  std::vector<Poly> one() const;
  /// Product of integral elements in omega-coordinates.
  std::vector<Poly> mul(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
  PolyVec mul(const PolyVec& a, const PolyVec& b) const;
  /// Column j = a * omega_j.
  PolyMatrix mult_matrix(const std::vector<Poly>& a) const;
  /// Power-basis vector -> omega-coordinates and back.
  PolyVec to_coords(const PolyVec& power) const;
  PolyVec from_coords(const PolyVec& coords) const;
  /// Tr(omega_j) for each j.
  const std::vector<Poly>& basis_traces() const { return traces_; }
  /// det(Tr(omega_i omega_j)).
  Poly discriminant() const;

 private:
  void build_tables();

  u32 p_;
  int n_;
  Side side_;
  std::optional<Poly> local_;
  std::vector<Poly> defpoly_;
  PolyMatrix basis_;
  Poly denom_;
  PolyMatrix inv_;  // basis_ * inv_ = inv_den_ * I
  Poly inv_den_;
  std::vector<std::vector<Poly>> table_;  // omega_i * omega_j at i * n + j
  std::vector<Poly> traces_;
};

using OrderPtr = std::shared_ptr<const Order>;

/// Residue algebra O / pi O viewed as an F_p-space of dimension n * deg(pi)
/// with basis z^k omega_i at index i * deg(pi) + k.
class ResidueAlgebra {
 public:
  ResidueAlgebra(const Order& order, Poly pi);

  int dim() const { return dim_; }
  const Poly& prime() const { return pi_; }
  const Order& order() const { return *order_; }
  std::vector<u32> to_vec(const std::vector<Poly>& coords) const;
  std::vector<Poly> to_coords(const std::vector<u32>& v) const;
  std::vector<u32> mul(const std::vector<u32>& a, const std::vector<u32>& b) const;
  std::vector<u32> one() const;
  /// Matrix of the F_p-linear map a -> a^p.
  FpMatrix frobenius() const;
  /// Basis of the nilradical (kernel of a sufficiently high Frobenius power).
  std::vector<std::vector<u32>> radical() const;

 private:
  const Order* order_;
  Poly pi_;
  int dpi_, dim_;
};

/// Solve L x = w for lower-triangular L over F_p[z] when the solution is
/// known to be polynomial.
std::vector<Poly> lower_solve(const PolyMatrix& l, std::vector<Poly> w);

/// Lattice generated by pi * e_i and lifted residue vectors, as an HNF basis.
PolyMatrix lift_with_prime(const ResidueAlgebra& alg, const std::vector<std::vector<u32>>& vs);

/// Enlarge `order` until it is maximal at the irreducible `pi` (round 2).
Order round2(Order order, const Poly& pi);

/// Maximal order of the given presentation: maximal at every prime whose
/// square divides the discriminant, or only at `local_prime` when set.
Order maximal_order(u32 p, const std::vector<Poly>& defpoly, Side side,
                    std::optional<Poly> local_prime = std::nullopt);

}  // namespace hessjac
