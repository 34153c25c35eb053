#pragma once

#include <utility>
#include <vector>

#include "hessjac/poly.hpp"

namespace hessjac {

using Factorization = std::vector<std::pair<Poly, int>>;

/// Complete factorization over F_p into monic irreducibles with multiplicity,
/// sorted by the Poly ordering. lc(a) is dropped. Throws on zero input.
///
/// Squarefree decomposition, then distinct-degree, then equal-degree
/// (Cantor-Zassenhaus) splitting. Randomized splitting draws from a generator
/// seeded from the input so the result order never depends on global state.
Factorization factor(const Poly& a);

/// Squarefree decomposition a = lc * prod g_i^i, g_i squarefree coprime.
Factorization squarefree_decomposition(const Poly& a);

bool is_squarefree(const Poly& a);

/// Rabin's test.
bool is_irreducible(const Poly& a);

/// Distinct roots in F_p, ascending.
std::vector<u32> roots(const Poly& a);

/// All monic irreducible polynomials of degree d over F_p in canonical order
/// (enumeration; only for tiny p^d).
std::vector<Poly> monic_irreducibles(u32 p, int d);

}  // namespace hessjac
