#include "hessjac/poly_factor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace hessjac {

namespace {

// g such that g(x)^p = a(x), for a with a' = 0.
Poly pth_root(const Poly& a) {
  u32 p = a.modulus();
  std::vector<u32> c;
  for (int i = 0; i <= a.deg(); i += static_cast<int>(p)) c.push_back(a[i]);
  return Poly(p, std::move(c));
}

u64 seed_of(const Poly& a) {
  u64 h = 0x9e3779b97f4a7c15ull ^ a.modulus();
  for (u32 c : a.coeffs()) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

// Equal-degree splitting of squarefree f whose irreducible factors all have degree d.
void edf(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  u32 p = f.modulus();
  while (true) {
    Poly h = Poly::random(p, f.deg() - 1, rng);
    if (h.is_constant()) continue;
    Poly g;
    if (p == 2) {
      // trace map h + h^2 + ... + h^(2^(d-1))
      Poly t = h, acc = h;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc += t;
      }
      g = gcd(acc, f);
    } else {
      // h^((p^d - 1)/2) = (h^(1 + p + ... + p^(d-1)))^((p-1)/2)
      Poly frob = h % f, norm = h % f;
      for (int i = 1; i < d; ++i) {
        frob = frob.powmod(p, f);
        norm = (norm * frob) % f;
      }
      Poly e = norm.powmod((p - 1) / 2, f);
      g = gcd(e - Poly::constant(p, 1), f);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
  }
}

// Factor a monic squarefree polynomial.
void factor_squarefree(const Poly& f, Rng& rng, std::vector<Poly>& out) {
  u32 p = f.modulus();
  Poly rest = f;
  Poly xp = Poly::x(p);
  Poly h = xp % rest;
  for (int d = 1; 2 * d <= rest.deg(); ++d) {
    h = h.powmod(p, rest);
    Poly g = gcd(h - xp, rest);
    if (g.deg() > 0) {
      edf(g, d, rng, out);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.deg() > 0) out.push_back(rest.monic());
}

}  // namespace

Factorization squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw Error("squarefree decomposition of zero");
  Factorization out;
  std::function<void(const Poly&, int)> rec = [&](const Poly& f, int mult) {
    if (f.deg() <= 0) return;
    Poly df = f.derivative();
    if (df.is_zero()) {
      rec(pth_root(f), mult * static_cast<int>(f.modulus()));
      return;
    }
    Poly c = gcd(f, df);
    Poly w = f / c;
    int i = 1;
    while (w.deg() > 0) {
      Poly y = gcd(w, c);
      Poly z = w / y;
      if (z.deg() > 0) out.emplace_back(z.monic(), i * mult);
      ++i;
      w = y;
      c = c / y;
    }
    // c is now a p-th power
    if (c.deg() > 0) rec(pth_root(c.monic()), mult * static_cast<int>(f.modulus()));
  };
  rec(a.monic(), 1);
  return out;
}

bool is_squarefree(const Poly& a) {
  if (a.is_zero()) return false;
  if (a.deg() <= 0) return true;
  return gcd(a, a.derivative()).deg() == 0;
}

Factorization factor(const Poly& a) {
  if (a.is_zero()) throw Error("factorization of zero polynomial");
  Rng rng(seed_of(a));
  Factorization out;
  for (auto& [g, m] : squarefree_decomposition(a)) {
    std::vector<Poly> parts;
    factor_squarefree(g, rng, parts);
    for (auto& q : parts) out.emplace_back(std::move(q), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second < r.second;
  });
  // merge equal factors coming from different squarefree layers
  Factorization merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first) {
      merged.back().second += fm.second;
    } else {
      merged.push_back(std::move(fm));
    }
  }
  return merged;
}

bool is_irreducible(const Poly& a) {
  if (a.deg() <= 0) return false;
  if (a.deg() == 1) return true;
  u32 p = a.modulus();
  Poly f = a.monic();
  int n = f.deg();
  Poly xp = Poly::x(p);
  // x^(p^n) == x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n
  std::vector<int> qs;
  for (int m = n, q = 2; m > 1; ++q) {
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  std::vector<Poly> frob(n + 1);
  frob[0] = xp % f;
  for (int i = 1; i <= n; ++i) frob[i] = frob[i - 1].powmod(p, f);
  if (frob[n] != frob[0]) return false;
  for (int q : qs) {
    if (gcd(frob[n / q] - xp, f).deg() != 0) return false;
  }
  return true;
}

std::vector<u32> roots(const Poly& a) {
  std::vector<u32> r;
  if (a.is_zero()) throw Error("roots of zero polynomial");
  u32 p = a.modulus();
  Poly xp = Poly::x(p);
  Poly lin = gcd(xp.powmod(p, a.monic()) - xp, a);
  if (lin.deg() <= 0) return r;
  Rng rng(seed_of(lin));
  std::vector<Poly> parts;
  edf(lin, 1, rng, parts);
  for (auto& q : parts) r.push_back(Zp::neg(q[0], p));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Poly> monic_irreducibles(u32 p, int d) {
  std::vector<Poly> out;
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
    Poly q(p, c);
    if (is_irreducible(q)) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hessjac
