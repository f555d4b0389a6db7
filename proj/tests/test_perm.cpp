#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "lindim/action.hpp"
#include "lindim/catalog.hpp"
#include "lindim/error.hpp"

using namespace lindim;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Permutation perm(const std::string& cycles, std::size_t degree) {
  return Permutation::parse_cycles(cycles, degree);
}

}  // namespace

TEST_SUITE_BEGIN("perm");

TEST_CASE("cycle parsing and printing") {
  Permutation p = perm("(1,2,3)(4,5)", 6);
  CHECK(p.images() == std::vector<std::uint32_t>{1, 2, 0, 4, 3, 5});
  CHECK(p.cycles_str() == "(1,2,3)(4,5)");
  CHECK(perm_order(p) == 6);
  CHECK(Permutation::identity(4).cycles_str() == "()");
  CHECK(perm("()", 3) == Permutation::identity(3));

  CHECK(code_of([] { perm("(0,1)", 3); }) == "ParseError");
  CHECK(code_of([] { perm("(1,7)", 6); }) == "ParseError");
  CHECK(code_of([] { perm("(1,2)(2,3)", 3); }) == "ParseError");
  CHECK(code_of([] { perm("1,2", 3); }) == "ParseError");
  CHECK(code_of([] { perm("(1,2", 3); }) == "ParseError");
}

TEST_CASE("composition acts from the right") {
  Permutation a = perm("(1,2)", 3), b = perm("(2,3)", 3);
  CHECK((a * b) == perm("(1,3,2)", 3));
  CHECK((a * a.inverse()).is_identity());
  Permutation c = perm("(1,2,3,4,5)", 5);
  CHECK((c * c * c * c * c).is_identity());
}

TEST_CASE("chain orders for small groups") {
  PermGroup s4(4, {perm("(1,2)", 4), perm("(1,2,3,4)", 4)});
  CHECK(s4.order() == 24);
  PermGroup c6(6, {perm("(1,2,3,4,5,6)", 6)});
  CHECK(c6.order() == 6);
  PermGroup triv(3, {Permutation::identity(3)});
  CHECK(triv.order() == 1);
}

TEST_CASE("membership by sifting") {
  PermGroup s4 = catalog_group("S4");
  CHECK(s4.contains(perm("(1,3)", 4)));
  PermGroup a4 = catalog_group("A4");
  CHECK(!a4.contains(perm("(1,2)", 4)));
  CHECK(a4.contains(perm("(1,2)(3,4)", 4)));
  CHECK(a4.contains(perm("(1,2,3)", 4)));

  // random generator words always sift to the identity
  std::mt19937_64 rng(7);
  PermGroup m11 = catalog_group("M11");
  for (int trial = 0; trial < 20; ++trial) {
    Permutation w = Permutation::identity(11);
    for (int i = 0; i < 8; ++i)
      w = w * m11.generators()[rng() % m11.generators().size()];
    CHECK(m11.contains(w));
  }
}

TEST_CASE("point stabilizers") {
  PermGroup s4 = catalog_group("S4");
  std::vector<Permutation> stab = s4.point_stabilizer_generators(0);
  REQUIRE(!stab.empty());
  for (const Permutation& g : stab) CHECK(g(0) == 0);
  CHECK(PermGroup(4, stab).order() == 6);

  PermGroup c4 = catalog_group("C4");
  CHECK(c4.point_stabilizer_generators(0).empty());

  // orbit-stabilizer over assorted catalog groups and points
  for (const char* name : {"5T3", "6T8", "6T10", "7T4", "A5", "D6"}) {
    PermGroup g = catalog_group(name);
    GroupAction nat = action_natural(g);
    for (std::uint32_t alpha = 0; alpha < g.degree(); ++alpha) {
      std::vector<Permutation> sg = g.point_stabilizer_generators(alpha);
      std::uint64_t stab_order = sg.empty() ? 1 : PermGroup(g.degree(), sg).order();
      std::size_t orbit_size = 0;
      for (const auto& orb : orbits(nat))
        if (std::find(orb.begin(), orb.end(), alpha) != orb.end())
          orbit_size = orb.size();
      CHECK(g.order() == stab_order * orbit_size);
    }
  }
}

TEST_CASE("least coset representatives") {
  PermGroup h(3, {perm("(1,2,3)", 3)});
  CHECK(h.min_coset_rep(perm("(1,2)", 3)) == perm("(2,3)", 3));
  CHECK(h.min_coset_rep(Permutation::identity(3)).is_identity());

  std::mt19937_64 rng(13);
  PermGroup s5 = catalog_group("S5");
  PermGroup f20 = catalog_group("F20");
  for (int trial = 0; trial < 25; ++trial) {
    Permutation g = Permutation::identity(5);
    for (int i = 0; i < 6; ++i)
      g = g * s5.generators()[rng() % s5.generators().size()];
    Permutation r = f20.min_coset_rep(g);
    // same coset, canonical within it, and lexicographically least
    CHECK(f20.contains(r * g.inverse()));
    CHECK(!(g < r));
    for (const Permutation& hgen : f20.generators())
      CHECK(f20.min_coset_rep(hgen * g) == r);
  }
}

TEST_CASE("catalog entries match their recorded orders") {
  for (const CatalogEntry& e : catalog_entries()) {
    PermGroup g = parse_group_text(e.definition);
    CHECK(g.degree() == e.degree);
    CHECK(g.order() == e.order);
  }
  CHECK(catalog_group("S4").order() == 24);
  CHECK(catalog_group("PSL32").order() == 168);
  CHECK(catalog_group("A7_15").order() == 2520);
  CHECK(catalog_has("6T13"));
  CHECK(!catalog_has("6T17"));
  CHECK(code_of([] { catalog_group("nope"); }) == "UnknownGroup");
}

TEST_CASE("group file parsing") {
  PermGroup g = parse_group_text("# comment\ndegree 4\n\ngen (1,2) # inline\ngen (3,4)\n");
  CHECK(g.degree() == 4);
  CHECK(g.order() == 4);
  CHECK(code_of([] { parse_group_text("gen (1,2)\n"); }) == "ParseError");
  CHECK(code_of([] { parse_group_text("degree 3\n"); }) == "ParseError");
  CHECK(code_of([] { parse_group_text("degree 3\nfoo\n"); }) == "ParseError");
}

TEST_CASE("k-subset action of S4") {
  GroupAction a = action_ksubsets(catalog_group("S4"), 2);
  CHECK(a.domain_size == 6);
  std::vector<std::string> want = {"{0,1}", "{0,2}", "{0,3}",
                                   "{1,2}", "{1,3}", "{2,3}"};
  CHECK(a.labels == want);
  CHECK(a.image_group().order() == 24);
  // (1,2) swaps {0,2}<->{1,2} and {0,3}<->{1,3}
  const Permutation& swap12 = a.images[a.group.generators()[0] == perm("(1,2)", 4) ? 0 : 1];
  CHECK(a.labels[swap12(1)] == "{1,2}");
  CHECK(a.labels[swap12(2)] == "{1,3}");
  CHECK(a.labels[swap12(0)] == "{0,1}");
}

TEST_CASE("coset action of S4 on a 4-cycle subgroup") {
  GroupAction a = action_cosets(catalog_group("S4"), {perm("(1,2,3,4)", 4)});
  CHECK(a.domain_size == 6);
  CHECK(a.image_group().order() == 24);
  CHECK(is_transitive(a));

  CHECK(code_of([] {
          action_cosets(catalog_group("A4"), {perm("(1,2)", 4)});
        }) == "BadParameter");
}

TEST_CASE("regular action") {
  GroupAction a = action_regular(catalog_group("S3"));
  CHECK(a.domain_size == 6);
  CHECK(a.image_group().order() == 6);
  CHECK(is_transitive(a));
  CHECK(!is_primitive(a));
}

TEST_CASE("imprimitive wreath action") {
  GroupAction a = action_wreath_imprimitive(catalog_group("S3"), catalog_group("S2"));
  CHECK(a.domain_size == 6);
  CHECK(a.group.order() == 72);
  CHECK(a.labels[0] == "(0,0)");
  CHECK(a.labels[3] == "(0,1)");
  CHECK(is_transitive(a));
  CHECK(!is_primitive(a));
  CHECK(minimal_block(a, 0, 1) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("product wreath action") {
  GroupAction a = action_wreath_product(catalog_group("S3"), catalog_group("S2"));
  CHECK(a.domain_size == 9);
  CHECK(a.group.order() == 72);
  CHECK(a.labels[0] == "(0,0)");
  CHECK(a.labels[5] == "(1,2)");
  CHECK(is_transitive(a));
  CHECK(is_primitive(a));
  CHECK(a.image_group().order() == 72);

  // induced generators satisfy every short relation of the abstract group
  GroupAction imp = action_wreath_imprimitive(catalog_group("S3"), catalog_group("S2"));
  std::size_t ng = a.group.generators().size();
  std::vector<std::vector<std::size_t>> words{{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : words)
      if (w.size() == len - 1)
        for (std::size_t i = 0; i < ng; ++i) {
          auto w2 = w;
          w2.push_back(i);
          next.push_back(w2);
        }
    for (auto& w : next) words.push_back(std::move(w));
  }
  for (const auto& w : words) {
    Permutation in_group = Permutation::identity(a.group.degree());
    Permutation in_prod = Permutation::identity(a.domain_size);
    for (std::size_t i : w) {
      in_group = in_group * a.group.generators()[i];
      in_prod = in_prod * a.images[i];
    }
    if (in_group.is_identity()) CHECK(in_prod.is_identity());
  }
}

TEST_CASE("uniform partition action") {
  GroupAction a = action_uniform_partitions(catalog_group("S4"), 2);
  CHECK(a.domain_size == 3);
  std::vector<std::string> want = {"{0,1|2,3}", "{0,2|1,3}", "{0,3|1,2}"};
  CHECK(a.labels == want);
  CHECK(is_transitive(a));

  GroupAction b = action_uniform_partitions(catalog_group("S9"), 3);
  CHECK(b.domain_size == 280);
  CHECK(is_transitive(b));
  CHECK(code_of([] {
          action_uniform_partitions(catalog_group("S4"), 3);
        }) == "BadParameter");
}

TEST_CASE("orbit structure") {
  PermGroup triv(4, {Permutation::identity(4)});
  CHECK(orbits(action_natural(triv)).size() == 4);

  PermGroup two_s3(6, {perm("(1,2,3)", 6), perm("(1,2)", 6),
                       perm("(4,5,6)", 6), perm("(4,5)", 6)});
  auto os = orbits(action_natural(two_s3));
  REQUIRE(os.size() == 2);
  CHECK(os[0] == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(os[1] == std::vector<std::uint32_t>{3, 4, 5});
}

TEST_CASE("blocks and primitivity") {
  GroupAction c6 = action_natural(catalog_group("C6"));
  CHECK(!is_primitive(c6));
  CHECK(minimal_block(c6, 0, 3) == std::vector<std::uint32_t>{0, 3});

  CHECK(is_primitive(action_natural(catalog_group("S5"))));
  CHECK(is_primitive(action_natural(catalog_group("1T1"))));
  CHECK(is_primitive(action_natural(catalog_group("C2"))));

  PermGroup triv(4, {Permutation::identity(4)});
  CHECK(code_of([&] { is_primitive(action_natural(triv)); }) == "NotTransitive");
}

TEST_CASE("action equivalence") {
  PermGroup s5 = catalog_group("S5");
  GroupAction k2 = action_ksubsets(s5, 2);
  GroupAction k3 = action_ksubsets(s5, 3);

  auto self = actions_equivalent(k2, k2);
  REQUIRE(self.has_value());
  for (std::uint32_t x = 0; x < k2.domain_size; ++x) CHECK((*self)[x] == x);

  auto comp = actions_equivalent(k2, k3);
  REQUIRE(comp.has_value());
  for (std::size_t i = 0; i < k2.images.size(); ++i)
    for (std::uint32_t x = 0; x < k2.domain_size; ++x)
      CHECK((*comp)[k2.images[i](x)] == k3.images[i]((*comp)[x]));

  GroupAction nat = action_natural(s5);
  CHECK(!actions_equivalent(nat, k2).has_value());

  PermGroup s4 = catalog_group("S4");
  GroupAction n4 = action_natural(s4);
  GroupAction kk = action_ksubsets(s4, 2);
  CHECK(!actions_equivalent(n4, kk).has_value());
  CHECK(code_of([&] { actions_equivalent(n4, k2); }) == "BadParameter");

  // intransitive: same action of a diagonal S3 matches itself
  PermGroup diag(6, {perm("(1,2,3)(4,5,6)", 6), perm("(1,2)(4,5)", 6)});
  GroupAction d = action_natural(diag);
  auto m = actions_equivalent(d, d);
  REQUIRE(m.has_value());
  for (std::size_t i = 0; i < d.images.size(); ++i)
    for (std::uint32_t x = 0; x < d.domain_size; ++x)
      CHECK((*m)[d.images[i](x)] == d.images[i]((*m)[x]));
}

TEST_SUITE_END();
