#include "lindim/formulas.hpp"

#include <numeric>
#include <string>

#include "lindim/error.hpp"

namespace lindim {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) fail("BadParameter", "overflow");
    r *= base;
  }
  return r;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // multiply before dividing; the running value stays integral
    if (r > UINT64_MAX / (n - k + i)) fail("BadParameter", "overflow");
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t formula_wreath_imprimitive(std::uint64_t k, std::uint64_t ell,
                                         bool k_regular,
                                         std::uint64_t lindim_k,
                                         std::uint64_t p) {
  if (k < 2 || ell < 1) fail("BadParameter", "need k >= 2 and ell >= 1");
  if (k_regular && k == p) return ell + 1;
  if (lindim_k == 0) fail("BadParameter", "lindim_k must be positive");
  return ell * lindim_k;
}

std::uint64_t formula_wreath_product(std::uint64_t k, std::uint64_t ell,
                                     std::uint64_t p) {
  if (k < 3 || ell < 2) fail("BadParameter", "need k >= 3 and ell >= 2");
  if (p != 0 && k % p == 0) return (k - 2) * ell + 1;
  return (k - 1) * ell;
}

std::uint64_t formula_sn_family(SnFamily fam, std::uint64_t n,
                                std::uint64_t k, std::uint64_t p) {
  switch (fam) {
    case SnFamily::natural:
      if (n <= 2) fail("OutOfTheoremRange", "natural action needs n > 2");
      return n - 1;
    case SnFamily::ksets:
      if (n < 10 || k < 1 || 2 * k >= n)
        fail("OutOfTheoremRange", "k-sets need n >= 10 and 1 <= k < n/2");
      if (p != 0 && n % p == 0 && k % p == 0) return n - 2;
      return n - 1;
    case SnFamily::uniform:
      if (n < 9 || k < 2 || n % k != 0 || n / k < 2)
        fail("OutOfTheoremRange",
             "uniform partitions need n >= 9 and 1 < k with k | n, k < n");
      if (p != 0 && p <= n)
        fail("OutOfTheoremRange",
             "uniform partition formula needs characteristic 0 or p > n");
      return (n * n - 3 * n) / 2;
  }
  fail("BadParameter", "unknown family");
}

namespace {

[[noreturn]] void violated(int row, const std::string& what) {
  fail("ConditionViolation", "row " + std::to_string(row) + " needs " + what);
}

void check_degree(const FormulaCase& c, std::uint64_t expect) {
  if (c.n != 0 && c.n != expect)
    violated(c.row, "degree " + std::to_string(expect));
}

std::uint64_t constant_row(const FormulaCase& c, std::uint64_t n,
                           std::uint64_t p, std::uint64_t value) {
  if (c.p != p) violated(c.row, "characteristic " + std::to_string(p));
  check_degree(c, n);
  return value;
}

}  // namespace

std::uint64_t formula_2transitive_table(const FormulaCase& c) {
  switch (c.row) {
    case 1: {
      if (c.d < 3) violated(1, "d >= 3");
      if (c.p < 2 || c.t < 1 || ipow(c.p, c.t) != c.q)
        violated(1, "q = p^t with p the field characteristic");
      check_degree(c, (ipow(c.q, c.d) - 1) / (c.q - 1));
      return ipow(binom(c.d + c.p - 2, c.d - 1), c.t);
    }
    case 2:
      return constant_row(c, 15, 2, 4);
    case 3:
    case 4: {
      std::uint64_t dmin = c.row == 3 ? 3 : 2;
      if (c.d < dmin)
        violated(c.row, "d >= " + std::to_string(dmin));
      if (c.p != 2) violated(c.row, "characteristic 2");
      std::uint64_t half = ipow(2, c.d - 1);
      std::uint64_t whole = ipow(2, 2 * c.d - 1);
      check_degree(c, c.row == 3 ? whole - half : whole + half);
      return 2 * c.d + 1;
    }
    case 5:
    case 6: {
      if (c.p != 2) violated(c.row, "characteristic 2");
      if (c.q < 5 || c.q % 2 == 0) violated(c.row, "odd prime power q >= 5");
      std::uint64_t r = c.q % 8;
      if (c.row == 5 && r != 1 && r != 7) violated(5, "q = +-1 (mod 8)");
      if (c.row == 6) {
        if (r != 3 && r != 5) violated(6, "q = +-3 (mod 8)");
        if (c.t % 2 != 0) violated(6, "a field containing GF(4)");
      }
      check_degree(c, c.q + 1);
      return (c.q + 1) / 2;
    }
    case 7: {
      if (c.m * c.m != 2 * c.q) violated(7, "m^2 = 2q");
      if (c.p < 2 || (c.q + 1 + c.m) % c.p != 0) violated(7, "p | q+1+m");
      check_degree(c, c.q * c.q + 1);
      return c.m * (c.q - 1) / 2 + 1;
    }
    case 8: {
      if (c.p < 2 || (c.q + 1) % c.p != 0) violated(8, "p | q+1");
      check_degree(c, c.q * c.q * c.q + 1);
      return c.q * c.q - c.q + 1;
    }
    case 9: {
      if (c.p != 2) violated(9, "characteristic 2");
      check_degree(c, c.q * c.q * c.q + 1);
      return c.q * c.q - c.q + 1;
    }
    case 10:
    case 11: {
      if (c.m * c.m != 3 * c.q) violated(c.row, "m^2 = 3q");
      if (c.p == 2) violated(c.row, "odd characteristic");
      std::uint64_t divisor = c.row == 10 ? c.q + 1 : c.q + c.m + 1;
      if (c.p < 2 || divisor % c.p != 0)
        violated(c.row, c.row == 10 ? "p | q+1" : "p | q+m+1");
      check_degree(c, c.q * c.q * c.q + 1);
      if (c.row == 10)
        return (c.m * c.q * c.q - c.m) / 6 + (c.q * c.q - c.q) / 2 + 1;
      return (c.m / 3) * (c.q * c.q - 1) + 1;
    }
    case 12:
      return constant_row(c, 22, 2, 10);
    case 13:
      return constant_row(c, 23, 2, 11);
    case 14:
      return constant_row(c, 24, 2, 12);
    case 15:
      return constant_row(c, 12, 3, 6);
    case 16:
      return constant_row(c, 11, 3, 5);
    case 17:
      return constant_row(c, 176, 2, 21);
    case 18:
      return constant_row(c, 176, 3, 49);
    case 19:
      return constant_row(c, 276, 2, 23);
    case 20:
      return constant_row(c, 276, 3, 126);
    default:
      fail("BadParameter", "table rows run 1 through 20");
  }
}

std::uint64_t default_2transitive(std::uint64_t n) {
  if (n < 2) fail("BadParameter", "need n >= 2");
  return n - 1;
}

AffineBound bound_affine(std::uint64_t d, std::uint64_t e, std::uint64_t t,
                         std::uint64_t p) {
  if (d < 1 || e < 1 || t < 1 || p < 2)
    fail("BadParameter", "need d, e, t >= 1 and p >= 2");
  AffineBound b;
  b.bound = d * (e / std::gcd(e, t)) + 1;
  b.exact = t == e;
  return b;
}

std::pair<std::uint64_t, std::uint64_t> bounds_intransitive(
    const std::vector<std::uint64_t>& values) {
  std::uint64_t lo = 0, hi = 0;
  for (std::uint64_t v : values) {
    lo = std::max(lo, v);
    hi += v;
  }
  return {lo, hi};
}

std::uint64_t exact_direct_product(const std::vector<std::uint64_t>& values) {
  std::uint64_t sum = 0;
  for (std::uint64_t v : values) sum += v;
  return sum;
}

}  // namespace lindim
