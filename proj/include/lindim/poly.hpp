#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lindim/gfq.hpp"

namespace lindim {

// Dense univariate polynomial over a fixed field.  Coefficients are stored
// low-degree-first with no trailing zeros; the zero polynomial is empty.
struct PolyGF {
  const Field* f = nullptr;
  std::vector<Fel> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const PolyGF& o) const { return f == o.f && c == o.c; }
};

PolyGF poly_make(const Field& f, std::vector<Fel> coeffs);  // trims zeros
PolyGF poly_x(const Field& f);
PolyGF poly_const(const Field& f, Fel a);

PolyGF poly_add(const PolyGF& a, const PolyGF& b);
PolyGF poly_sub(const PolyGF& a, const PolyGF& b);
PolyGF poly_mul(const PolyGF& a, const PolyGF& b);
PolyGF poly_scale(const PolyGF& a, Fel s);
PolyGF poly_monic(const PolyGF& a);

// a = q*b + r with deg r < deg b; b must be nonzero.
void poly_divmod(const PolyGF& a, const PolyGF& b, PolyGF* q, PolyGF* r);
PolyGF poly_mod(const PolyGF& a, const PolyGF& m);
PolyGF poly_gcd(const PolyGF& a, const PolyGF& b);  // monic (or zero)
PolyGF poly_mulmod(const PolyGF& a, const PolyGF& b, const PolyGF& m);
PolyGF poly_powmod(const PolyGF& a, std::uint64_t e, const PolyGF& m);
PolyGF poly_derivative(const PolyGF& a);
Fel poly_eval(const PolyGF& a, Fel x);

// Complete factorization into monic irreducibles with multiplicities,
// sorted by (degree, coefficient tuple).  Squarefree decomposition +
// distinct-degree + Cantor-Zassenhaus splitting; the random choices in the
// splitting step come from rng, so results are deterministic per seed (and
// the factor set itself is seed-independent).
std::vector<std::pair<PolyGF, int>> poly_factor(const PolyGF& a,
                                                std::mt19937_64& rng);

std::string poly_str(const PolyGF& a);  // diagnostic form "1 + 2*x^3"

}  // namespace lindim
