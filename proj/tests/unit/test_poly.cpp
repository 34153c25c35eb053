#include <doctest.h>

#include "helpers.hpp"
#include "hessjac/poly_factor.hpp"
#include "hessjac/ratfunc.hpp"

using namespace testing;

namespace {

// Brute-force irreducibility: no monic divisor of degree 1..deg/2.
bool brute_irreducible(const Poly& f) {
  u32 p = f.modulus();
  for (int d = 1; 2 * d <= f.deg(); ++d) {
    u64 total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    std::vector<u32> c(d + 1, 0);
    c[d] = 1;
    for (u64 idx = 0; idx < total; ++idx) {
      u64 v = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<u32>(v % p);
        v /= p;
      }
      if ((f % Poly(p, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field basics") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(32771));
  CHECK_FALSE(is_prime_u32(32769));
  CHECK_FALSE(is_prime_u32(1));
  CHECK(Zp::mul(Zp::inv(3, 7), 3, 7) == 1);
  CHECK_THROWS_WITH(Zp::inv(0, 7), "inverse of zero in F_p");
  CHECK_THROWS(check_modulus(15));
}

TEST_CASE("canonical form") {
  Poly a = P(5, {1, 2, 3});
  Poly b = P(5, {0, 0, 2});
  Poly c = a - a;
  CHECK(c.is_zero());
  CHECK(c.deg() == -1);
  CHECK(c.coeffs().empty());
  CHECK((P(5, {1, 2, 3}) + P(5, {0, 0, 2})).deg() == 1);
  CHECK((a * Poly(5)).is_zero());
  CHECK(P(5, {3, 0, 0}).deg() == 0);
  (void)b;
}

TEST_CASE("xgcd") {
  u32 p = 32771;
  auto r = xgcd(P(p, {-1, 0, 1}), P(p, {-1, 1}));
  CHECK(r.g == P(p, {-1, 1}));
  CHECK(r.s.is_zero());
  CHECK(r.t == P(p, {1}));

  Poly a = P(p, {4, 0, 6});
  auto r2 = xgcd(a, Poly(p));
  CHECK(r2.g == a.monic());
  CHECK(r2.s == Poly::constant(p, Zp::inv(6, p)));
  CHECK(r2.t.is_zero());

  CHECK_THROWS_WITH(xgcd(Poly(p), Poly(p)), "xgcd of zero pair");

  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Poly x = Poly::random(p, static_cast<int>(rng() % 12), rng);
    Poly y = Poly::random(p, static_cast<int>(rng() % 12), rng);
    if (x.is_zero() && y.is_zero()) continue;
    auto e = xgcd(x, y);
    CHECK(e.s * x + e.t * y == e.g);
    CHECK(e.g.is_monic());
    CHECK(e.g.divides(x));
    CHECK(e.g.divides(y));
  }
}

TEST_CASE("division and evaluation") {
  Poly a = P(7, {1, 2, 3, 4, 5});
  Poly b = P(7, {3, 0, 1});
  auto [q, r] = a.divrem(b);
  CHECK(q * b + r == a);
  CHECK(r.deg() < b.deg());
  CHECK_THROWS_WITH(a.divrem(Poly(7)), "polynomial division by zero");
  CHECK(P(7, {1, 1}).eval(6) == 0);
  CHECK(P(7, {0, 1}).compose(P(7, {1, 1})) == P(7, {1, 1}));
  CHECK(valuation(P(7, {0, 0, 0, 2}), P(7, {0, 1})) == 3);
}

TEST_CASE("factor examples") {
  auto f = factor(P(5, {-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].second == 1);
  CHECK(f[1].second == 1);
  CHECK(((f[0].first == P(5, {-1, 1}) && f[1].first == P(5, {1, 1})) ||
         (f[0].first == P(5, {1, 1}) && f[1].first == P(5, {-1, 1}))));
  auto g = factor(P(2, {0, 1}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].first == P(2, {0, 1}));
  CHECK(g[0].second == 1);
  CHECK_THROWS(factor(Poly(5)));
}

TEST_CASE("factor round trip") {
  for (u32 p : {2u, 3u, 7u, 32771u}) {
    Rng rng(p);
    for (int i = 0; i < 500; ++i) {
      Poly a = Poly::random(p, 1 + static_cast<int>(rng() % 14), rng);
      if (a.is_zero()) continue;
      if (i % 5 == 0) a = a * a * Poly::random(p, 2, rng);
      if (a.is_zero()) continue;
      Poly prod = Poly::constant(p, a.lc());
      for (const auto& [q, m] : factor(a)) {
        CHECK(q.is_monic());
        CHECK(is_irreducible(q));
        prod *= q.pow(m);
      }
      CHECK(prod == a);
    }
  }
}

TEST_CASE("factors of random degree-8 polynomials over F_7 are irreducible by exhaustive search") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    Poly a = Poly::random(7, 8, rng, true);
    for (const auto& [q, m] : factor(a)) CHECK(brute_irreducible(q));
    CHECK(is_irreducible(a) == brute_irreducible(a));
  }
}

TEST_CASE("roots and irreducibles") {
  auto r = roots(P(5, {-1, 0, 1}));
  CHECK(r == std::vector<u32>{1, 4});
  CHECK(monic_irreducibles(2, 2).size() == 1);
  CHECK(monic_irreducibles(2, 3).size() == 2);
  CHECK(monic_irreducibles(3, 2).size() == 3);
}

TEST_CASE("rational functions") {
  u32 p = 11;
  RatFunc a(P(p, {-1, 0, 1}), P(p, {-1, 1}));
  CHECK(a.num() == P(p, {1, 1}));
  CHECK(a.den().is_one());
  RatFunc b(P(p, {1}), P(p, {0, 2}));
  CHECK(b.den().is_monic());
  CHECK((a * b) / b == a);
  CHECK((a + b) - b == a);
  CHECK(b.inverse() * b == RatFunc(P(p, {1})));
  CHECK(b.degree() == -1);
}
