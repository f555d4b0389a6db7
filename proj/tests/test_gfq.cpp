#include "lindim/gfq.hpp"

#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "lindim/error.hpp"
#include "lindim/poly.hpp"

using namespace lindim;

namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_SUITE_BEGIN("gfq");

TEST_CASE("prime field basics") {
  const Field& f2 = Field::get(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.add(1, 1) == 0);
  const Field& f3 = Field::get(3, 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.sub(0, 1) == 2);
  const Field& f5 = Field::get(5, 1);
  CHECK(f5.div(3, 4) == 2);  // 3 * 4^-1 = 3 * 4 = 12 = 2
}

TEST_CASE("field construction errors") {
  CHECK(code_of([] { Field::get(4, 1); }) == "NotPrime");
  CHECK(code_of([] { Field::get(1, 1); }) == "NotPrime");
  CHECK(code_of([] { Field::get(2, 0); }) == "BadParameter");
  CHECK(code_of([] { Field::get(2, 21); }) == "FieldTooLarge");
  CHECK(code_of([] { Field::get_order(12); }) == "NotPrime");
  CHECK(code_of([] { Field::get(3, 1).inv(0); }) == "DivideByZero");
}

TEST_CASE("canonical instances") {
  const Field& a = Field::get(2, 2);
  const Field& b = Field::get_order(4);
  CHECK(&a == &b);
  CHECK(a.defining_poly() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("GF(4) arithmetic") {
  const Field& f = Field::get(2, 2);
  Fel w = f.gen();  // the class of x
  CHECK(f.mul(w, w) == f.add(w, 1));  // x^2 = x + 1
  CHECK(f.mul(w, f.add(w, 1)) == 1);  // x * (x+1) = x^2 + x = 1
  CHECK(f.inv(w) == f.add(w, 1));
}

TEST_CASE("GF(8) element text") {
  const Field& f = Field::get(2, 3);
  Fel a = f.parse_elem("1,0,1");  // 1 + x^2
  CHECK(f.elem_str(a) == "1,0,1");
  CHECK(a == 1 + 4);
  const Field& f3 = Field::get(3, 1);
  CHECK(f3.elem_str(2) == "2");
  CHECK(f3.parse_elem("2") == 2);
  CHECK(code_of([&] { f.parse_elem("1,0"); }) == "ParseError");
  CHECK(code_of([&] { f.parse_elem("1,0,7"); }) == "ParseError");
  CHECK(code_of([&] { f3.parse_elem("x"); }) == "ParseError");
}

TEST_CASE("multiplicative group order, exhaustive over small fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u,
                          64u, 81u, 121u, 125u, 128u, 256u, 343u, 512u, 625u,
                          1024u, 2048u, 4096u}) {
    const Field& f = Field::get_order(q);
    for (Fel a = 1; a < q; ++a) {
      REQUIRE(f.pow(a, q - 1) == 1);
      REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {9u, 16u, 27u, 49u, 128u, 6561u, 65536u}) {
    const Field& f = Field::get_order(q);
    for (int i = 0; i < 200; ++i) {
      Fel a = static_cast<Fel>(rng() % q);
      Fel b = static_cast<Fel>(rng() % q);
      Fel c = static_cast<Fel>(rng() % q);
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("defining polynomials are irreducible and deterministic") {
  for (auto [p, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 5}, {3, 3}, {5, 4}, {7, 2}, {2, 17}, {3, 11}}) {
    const Field& f = Field::get(p, t);
    const Field& fp = Field::get(p, 1);
    std::vector<Fel> coeffs(f.defining_poly().begin(), f.defining_poly().end());
    CHECK(is_irreducible(fp, coeffs));
    CHECK(f.defining_poly().size() == t + 1);
    CHECK(f.defining_poly().back() == 1);
  }
  // beyond-table search (2^16 < q <= 2^20) agrees on re-entry
  const Field& big = Field::get(2, 18);
  const Field& big2 = Field::get(2, 18);
  CHECK(&big == &big2);
  CHECK(big.q() == (1u << 18));
}

TEST_CASE("subfield embedding GF(2) -> GF(4)") {
  const Field& f2 = Field::get(2, 1);
  const Field& f4 = Field::get(2, 2);
  Embedding e(f2, f4);
  CHECK(e(0) == 0);
  CHECK(e(1) == 1);
  CHECK(code_of([&] { Embedding(f4, f2); }) == "NoEmbedding");
  CHECK(code_of([&] { Embedding(Field::get(3, 1), f4); }) == "NoEmbedding");
}

TEST_CASE("embeddings are field homomorphisms, exhaustive") {
  for (auto [s, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {4, 16}, {4, 256}, {16, 256}, {9, 81}, {8, 64}, {5, 125}}) {
    const Field& fs = Field::get_order(s);
    const Field& fe = Field::get_order(e);
    Embedding emb(fs, fe);
    CHECK(emb(1) == 1);
    for (Fel a = 0; a < s; ++a)
      for (Fel b = 0; b < s; ++b) {
        REQUIRE(emb(fs.add(a, b)) == fe.add(emb(a), emb(b)));
        REQUIRE(emb(fs.mul(a, b)) == fe.mul(emb(a), emb(b)));
      }
    // injective
    std::set<Fel> images;
    for (Fel a = 0; a < s; ++a) images.insert(emb(a));
    CHECK(images.size() == s);
  }
}

TEST_CASE("embedding towers compose") {
  const Field& f2 = Field::get_order(2);
  const Field& f4 = Field::get_order(4);
  const Field& f16 = Field::get_order(16);
  Embedding e24(f2, f4), e416(f4, f16), e216(f2, f16);
  for (Fel a = 0; a < 2; ++a) CHECK(e416(e24(a)) == e216(a));
}

TEST_CASE("polynomial factorization over GF(q)") {
  const Field& f2 = Field::get(2, 1);
  std::mt19937_64 rng(0);
  // x^15 - 1 over GF(2): factors of degree 1, 2, 4, 4, 4
  std::vector<Fel> c(16, 0);
  c[0] = 1;
  c[15] = 1;
  auto fac = poly_factor(poly_make(f2, c), rng);
  std::multiset<int> degs;
  for (auto& [g, m] : fac) {
    CHECK(m == 1);
    degs.insert(g.deg());
    CHECK(is_irreducible(f2, g.c));
  }
  CHECK(degs == std::multiset<int>({1, 2, 4, 4, 4}));

  // (x+1)^2 * (x^2+x+1) over GF(2)
  PolyGF a = poly_make(f2, {1, 1});
  PolyGF b = poly_make(f2, {1, 1, 1});
  PolyGF prod = poly_mul(poly_mul(a, a), b);
  auto fac2 = poly_factor(prod, rng);
  REQUIRE(fac2.size() == 2);
  CHECK(fac2[0].first == a);
  CHECK(fac2[0].second == 2);
  CHECK(fac2[1].first == b);
  CHECK(fac2[1].second == 1);
}

TEST_CASE("factorization round-trips on random polynomials") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const Field& f = Field::get_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 9);
      std::vector<Fel> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = static_cast<Fel>(rng() % q);
      c.back() = 1;
      PolyGF a = poly_make(f, std::move(c));
      auto fac = poly_factor(a, rng);
      PolyGF prod = poly_const(f, 1);
      int degsum = 0;
      for (auto& [g, m] : fac) {
        REQUIRE(is_irreducible(f, g.c));
        for (int i = 0; i < m; ++i) prod = poly_mul(prod, g);
        degsum += g.deg() * m;
      }
      REQUIRE(prod == a);
      REQUIRE(degsum == a.deg());
    }
  }
}

TEST_CASE("factorization is seed independent") {
  const Field& f3 = Field::get(3, 1);
  std::vector<Fel> c = {1, 0, 2, 0, 0, 0, 1, 2, 1};
  std::mt19937_64 r1(1), r2(99);
  auto f1 = poly_factor(poly_make(f3, c), r1);
  auto f2 = poly_factor(poly_make(f3, c), r2);
  REQUIRE(f1.size() == f2.size());
  for (std::size_t i = 0; i < f1.size(); ++i) {
    CHECK(f1[i].first == f2[i].first);
    CHECK(f1[i].second == f2[i].second);
  }
}

TEST_SUITE_END();
