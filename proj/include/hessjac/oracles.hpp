#pragma once

#include <vector>

#include "hessjac/jacobian.hpp"

namespace hessjac {

/// HR-Min by computing l(D + mA) with full Riemann-Roch bases for m = 0..g.
/// Throws when no m works or when the first nonzero space is not a line.
HrMinResult brute_hr_min(JacobianCtx& ctx, const Divisor& d);

/// Number of degree-one places of F over F_{p^m}: the sum of deg P over
/// places with deg P | m. Requires p^m <= 2^16.
i64 count_degree_one_places(const FunctionField& field, int m);

/// Coefficients a_0..a_2g of the L-polynomial from N_1..N_g.
/// Requires g <= 3 and p^g <= 2^16.
std::vector<i64> l_polynomial(const FunctionField& field);

/// #Jac(F)(F_p) = L(1).
i64 jacobian_order(const FunctionField& field);

}  // namespace hessjac
