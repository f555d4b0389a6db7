#include "lindim/poly.hpp"

#include <algorithm>

#include "lindim/error.hpp"

namespace lindim {

namespace {

void trim(std::vector<Fel>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// p-th root of a polynomial all of whose exponents are multiples of p;
// inverse Frobenius on coefficients is a -> a^(p^(t-1)).
PolyGF pth_root(const PolyGF& a) {
  const Field& f = *a.f;
  std::uint64_t inv_frob = 1;
  for (std::uint32_t i = 0; i + 1 < f.t(); ++i) inv_frob *= f.p();
  std::vector<Fel> out;
  for (std::size_t i = 0; i < a.c.size(); i += f.p())
    out.push_back(f.pow(a.c[i], inv_frob));
  return poly_make(f, std::move(out));
}

bool poly_less(const PolyGF& a, const PolyGF& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(),
                                      b.c.end());
}

PolyGF random_poly(const Field& f, int deg_below, std::mt19937_64& rng) {
  std::vector<Fel> c(static_cast<std::size_t>(deg_below));
  for (auto& x : c) x = static_cast<Fel>(rng() % f.q());
  return poly_make(f, std::move(c));
}

// Equal-degree splitting: h is monic squarefree, all irreducible factors of
// degree d.  Appends the factors to out.
void equal_degree(const PolyGF& h, int d, std::mt19937_64& rng,
                  std::vector<PolyGF>* out) {
  const Field& f = *h.f;
  if (h.deg() == d) {
    out->push_back(poly_monic(h));
    return;
  }
  PolyGF one = poly_const(f, 1);
  while (true) {
    PolyGF a = random_poly(f, h.deg(), rng);
    if (a.deg() < 1) continue;
    PolyGF b;
    if (f.p() == 2) {
      // trace map of a over GF(2): a + a^2 + ... + a^(2^(d*t-1))
      PolyGF s = poly_mod(a, h);
      PolyGF acc = s;
      for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(d) * f.t();
           ++i) {
        s = poly_mulmod(s, s, h);
        acc = poly_add(acc, s);
      }
      b = acc;
    } else {
      // norm to GF(q), then power by (q-1)/2; a^((q^d-1)/2) - 1 overall
      PolyGF nrm = poly_mod(a, h);
      PolyGF s = nrm;
      for (int i = 1; i < d; ++i) {
        s = poly_powmod(s, f.q(), h);
        nrm = poly_mulmod(nrm, s, h);
      }
      b = poly_sub(poly_powmod(nrm, (f.q() - 1) / 2, h), one);
    }
    PolyGF g = poly_gcd(b, h);
    if (g.deg() > 0 && g.deg() < h.deg()) {
      PolyGF q, r;
      poly_divmod(h, g, &q, &r);
      equal_degree(g, d, rng, out);
      equal_degree(q, d, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization of a monic squarefree polynomial.
void distinct_degree(PolyGF g, std::mt19937_64& rng,
                     std::vector<PolyGF>* out) {
  const Field& f = *g.f;
  PolyGF h = poly_mod(poly_x(f), g);
  int d = 0;
  while (g.deg() > 0 && 2 * (d + 1) <= g.deg()) {
    ++d;
    h = poly_powmod(h, f.q(), g);
    PolyGF diff = poly_sub(h, poly_mod(poly_x(f), g));
    PolyGF gd = poly_gcd(diff, g);
    if (gd.deg() > 0) {
      equal_degree(gd, d, rng, out);
      PolyGF q, r;
      poly_divmod(g, gd, &q, &r);
      g = q;
      h = poly_mod(h, g);
    }
  }
  if (g.deg() > 0) out->push_back(poly_monic(g));
}

// Squarefree decomposition; multiplicities in increasing order of factor.
void squarefree(const PolyGF& a, int mult,
                std::vector<std::pair<PolyGF, int>>* out) {
  const Field& f = *a.f;
  PolyGF d = poly_derivative(a);
  if (d.is_zero()) {
    squarefree(pth_root(a), mult * static_cast<int>(f.p()), out);
    return;
  }
  PolyGF c = poly_gcd(a, d);
  PolyGF w, r;
  poly_divmod(a, c, &w, &r);
  int i = 1;
  while (w.deg() > 0) {
    PolyGF y = poly_gcd(w, c);
    PolyGF fac, r2;
    poly_divmod(w, y, &fac, &r2);
    if (fac.deg() > 0) out->emplace_back(poly_monic(fac), mult * i);
    w = y;
    poly_divmod(c, y, &c, &r2);
    ++i;
  }
  if (c.deg() > 0)
    squarefree(pth_root(c), mult * static_cast<int>(f.p()), out);
}

}  // namespace

PolyGF poly_make(const Field& f, std::vector<Fel> coeffs) {
  trim(coeffs);
  return PolyGF{&f, std::move(coeffs)};
}

PolyGF poly_x(const Field& f) { return PolyGF{&f, {0, 1}}; }

PolyGF poly_const(const Field& f, Fel a) {
  return a == 0 ? PolyGF{&f, {}} : PolyGF{&f, {a}};
}

PolyGF poly_add(const PolyGF& a, const PolyGF& b) {
  const Field& f = *a.f;
  std::vector<Fel> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Fel x = i < a.c.size() ? a.c[i] : 0;
    Fel y = i < b.c.size() ? b.c[i] : 0;
    c[i] = f.add(x, y);
  }
  trim(c);
  return PolyGF{&f, std::move(c)};
}

PolyGF poly_sub(const PolyGF& a, const PolyGF& b) {
  return poly_add(a, poly_scale(b, b.f->neg(1)));
}

PolyGF poly_scale(const PolyGF& a, Fel s) {
  const Field& f = *a.f;
  if (s == 0) return PolyGF{&f, {}};
  std::vector<Fel> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(a.c[i], s);
  return PolyGF{&f, std::move(c)};
}

PolyGF poly_mul(const PolyGF& a, const PolyGF& b) {
  const Field& f = *a.f;
  if (a.is_zero() || b.is_zero()) return PolyGF{&f, {}};
  std::vector<Fel> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
  }
  trim(c);
  return PolyGF{&f, std::move(c)};
}

PolyGF poly_monic(const PolyGF& a) {
  if (a.is_zero() || a.c.back() == 1) return a;
  return poly_scale(a, a.f->inv(a.c.back()));
}

void poly_divmod(const PolyGF& a, const PolyGF& b, PolyGF* q, PolyGF* r) {
  const Field& f = *a.f;
  if (b.is_zero()) fail("DivideByZero", "polynomial division by zero");
  std::vector<Fel> rem = a.c;
  std::vector<Fel> quo(a.c.size() > b.c.size() - 1
                           ? a.c.size() - (b.c.size() - 1)
                           : 0,
                       0);
  Fel lead_inv = f.inv(b.c.back());
  for (std::size_t k = rem.size(); k-- > 0 && k + 1 >= b.c.size();) {
    if (rem[k] == 0) continue;
    Fel coef = f.mul(rem[k], lead_inv);
    std::size_t shift = k - (b.c.size() - 1);
    quo[shift] = coef;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      rem[shift + j] = f.sub(rem[shift + j], f.mul(coef, b.c[j]));
  }
  trim(rem);
  trim(quo);
  if (q) *q = PolyGF{&f, std::move(quo)};
  if (r) *r = PolyGF{&f, std::move(rem)};
}

PolyGF poly_mod(const PolyGF& a, const PolyGF& m) {
  PolyGF r;
  poly_divmod(a, m, nullptr, &r);
  return r;
}

PolyGF poly_gcd(const PolyGF& a, const PolyGF& b) {
  PolyGF x = a, y = b;
  while (!y.is_zero()) {
    PolyGF r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return poly_monic(x);
}

PolyGF poly_mulmod(const PolyGF& a, const PolyGF& b, const PolyGF& m) {
  return poly_mod(poly_mul(a, b), m);
}

PolyGF poly_powmod(const PolyGF& a, std::uint64_t e, const PolyGF& m) {
  PolyGF r = poly_mod(poly_const(*a.f, 1), m);
  PolyGF base = poly_mod(a, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m);
    base = poly_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

PolyGF poly_derivative(const PolyGF& a) {
  const Field& f = *a.f;
  std::vector<Fel> c;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    Fel k = static_cast<Fel>(i % f.p());
    // multiply coefficient by the integer i, reduced into the prime field
    Fel scaled = 0;
    for (Fel j = 0; j < k; ++j) scaled = f.add(scaled, a.c[i]);
    c.push_back(scaled);
  }
  trim(c);
  return PolyGF{&f, std::move(c)};
}

Fel poly_eval(const PolyGF& a, Fel x) {
  const Field& f = *a.f;
  Fel acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;)
    acc = f.add(f.mul(acc, x), a.c[i]);
  return acc;
}

std::vector<std::pair<PolyGF, int>> poly_factor(const PolyGF& a,
                                                std::mt19937_64& rng) {
  if (a.deg() < 1) fail("BadParameter", "cannot factor a constant");
  std::vector<std::pair<PolyGF, int>> sf;
  squarefree(poly_monic(a), 1, &sf);
  std::vector<std::pair<PolyGF, int>> out;
  for (auto& [part, mult] : sf) {
    std::vector<PolyGF> irr;
    distinct_degree(part, rng, &irr);
    for (auto& g : irr) out.emplace_back(g, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

bool is_irreducible(const Field& f, const std::vector<Fel>& coeffs) {
  PolyGF g = poly_make(f, coeffs);
  int n = g.deg();
  if (n < 1) return false;
  if (n == 1) return true;
  g = poly_monic(g);
  // Rabin: x^(q^n) == x mod g, and x^(q^(n/r)) - x coprime to g for each
  // prime r dividing n
  PolyGF x = poly_x(f);
  PolyGF h = poly_mod(x, g);
  std::vector<PolyGF> powers;  // h after i applications of Frobenius
  for (int i = 0; i < n; ++i) {
    h = poly_powmod(h, f.q(), g);
    powers.push_back(h);
  }
  if (!(powers[n - 1] == poly_mod(x, g))) return false;
  int m = n;
  for (int r = 2; r * r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    PolyGF diff = poly_sub(powers[n / r - 1], poly_mod(x, g));
    if (poly_gcd(diff, g).deg() != 0) return false;
  }
  if (m > 1) {
    PolyGF diff = poly_sub(powers[n / m - 1], poly_mod(x, g));
    if (poly_gcd(diff, g).deg() != 0) return false;
  }
  return true;
}

std::string poly_str(const PolyGF& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += a.f->elem_str(a.c[i]);
    if (i == 1) s += "*x";
    if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s;
}

}  // namespace lindim
