#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lindim {

// Closed forms for the linear dimension of specific action families over
// GF(p^t). Characteristic p = 0 selects the "p does not divide" branch
// wherever a formula distinguishes characteristics.

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

// K wr L acting on k*ell points block-imprimitively, K primitive on k
// points (caller-asserted), L any subgroup of Sym(ell). lindim_k is the
// value for (K, k points) over the same field; it is ignored when the
// regular branch applies.
std::uint64_t formula_wreath_imprimitive(std::uint64_t k, std::uint64_t ell,
                                         bool k_regular,
                                         std::uint64_t lindim_k,
                                         std::uint64_t p);

// S_k wr S_ell in product action on k^ell tuples, k >= 3, ell >= 2.
std::uint64_t formula_wreath_product(std::uint64_t k, std::uint64_t ell,
                                     std::uint64_t p);

// Symmetric and alternating group families.
enum class SnFamily {
  natural,  // S_n or A_n on n points, n > 2; k ignored
  ksets,    // action on k-subsets, n >= 10, 1 <= k < n/2
  uniform,  // partitions into blocks of size k, n >= 9, k | n, 1 < k < n,
            // and p = 0 or p > n
};

std::uint64_t formula_sn_family(SnFamily fam, std::uint64_t n,
                                std::uint64_t k, std::uint64_t p);

// One row of the 2-transitive classification table. Parameters that a row
// does not use stay zero; n = 0 skips the degree cross-check.
struct FormulaCase {
  int row = 0;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
};

std::uint64_t formula_2transitive_table(const FormulaCase& c);

// Value for a 2-transitive action not matching any table row.
std::uint64_t default_2transitive(std::uint64_t n);

// Upper bound for AGL(d, p^e) on p^(de) points over GF(p^t); exact when
// t = e, where the bound collapses to d+1.
struct AffineBound {
  std::uint64_t bound = 0;
  bool exact = false;
};

AffineBound bound_affine(std::uint64_t d, std::uint64_t e, std::uint64_t t,
                         std::uint64_t p);

// Sandwich bounds from per-orbit values: lo = max, hi = sum. The sum is
// exact when the group is a direct product acting with distinct orbit
// stabilizers; the caller asserts that by using the exact variant.
std::pair<std::uint64_t, std::uint64_t> bounds_intransitive(
    const std::vector<std::uint64_t>& values);

std::uint64_t exact_direct_product(const std::vector<std::uint64_t>& values);

}  // namespace lindim
