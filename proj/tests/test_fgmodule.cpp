#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lindim/catalog.hpp"
#include "lindim/error.hpp"
#include "lindim/fgmodule.hpp"
#include "lindim/gfq.hpp"
#include "lindim/meataxe.hpp"

using namespace lindim;

TEST_SUITE_BEGIN("permmod");

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

FGModule natural_module(const std::string& name, std::uint32_t q) {
  return perm_module(action_natural(catalog_group(name)), Field::get_order(q));
}

std::multiset<std::size_t> chop_dims(const FGModule& m, std::uint64_t seed) {
  std::multiset<std::size_t> dims;
  for (const FGModule& f : chop(m, seed)) dims.insert(f.dim);
  return dims;
}

// exhaustive ground truth: spin every vector, then close under pairwise sums
std::vector<SubspaceGF> all_submodules(const FGModule& m) {
  const Field& f = m.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.dim; ++i) total *= f.q();
  REQUIRE(total <= (1u << 20));

  std::set<SubspaceGF> subs;
  subs.insert(SubspaceGF::zero(f, m.dim));
  for (std::uint64_t t = 1; t < total; ++t) {
    std::vector<Fel> v(m.dim);
    std::uint64_t rest = t;
    for (std::size_t i = 0; i < m.dim; ++i) {
      v[i] = static_cast<Fel>(rest % f.q());
      rest /= f.q();
    }
    subs.insert(spin_vector(m, v));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SubspaceGF> cur(subs.begin(), subs.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (subs.insert(subspace_sum(cur[i], cur[j])).second) grew = true;
  }
  return {subs.begin(), subs.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(
    const std::vector<SubspaceGF>& nodes) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[i].dim() >= nodes[j].dim() || !nodes[j].contains(nodes[i]))
        continue;
      bool strictly_between = false;
      for (std::size_t k = 0; k < nodes.size() && !strictly_between; ++k)
        strictly_between = nodes[k].dim() > nodes[i].dim() &&
                           nodes[k].dim() < nodes[j].dim() &&
                           nodes[k].contains(nodes[i]) &&
                           nodes[j].contains(nodes[k]);
      if (!strictly_between) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

TEST_CASE("permutation module matrices") {
  FGModule m = natural_module("C2", 3);
  CHECK(m.dim == 2);
  REQUIRE(m.gens.size() == 1);
  MatrixGF swap(Field::get(3, 1), 2, 2);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  CHECK(m.gens[0] == swap);
  CHECK(m.action != nullptr);
}

TEST_CASE("spin of a difference vector") {
  FGModule m = natural_module("S3", 3);
  SubspaceGF w = spin_vector(m, {1, 2, 0});  // e0 - e1
  CHECK(w.dim() == 2);
  CHECK(w == constant_and_zero_sum(m).second);

  // spinning a basis of the whole space gives the whole space
  SubspaceGF full = spin(m, MatrixGF::identity(m.field(), 3));
  CHECK(full.dim() == 3);
}

TEST_CASE("constants and the zero-sum hyperplane") {
  FGModule m5 = natural_module("S5", 5);
  auto [c5, z5] = constant_and_zero_sum(m5);
  CHECK(c5.dim() == 1);
  CHECK(z5.dim() == 4);
  CHECK(z5.contains(c5));  // the characteristic divides the degree

  FGModule m3 = natural_module("S3", 2);
  auto [c3, z3] = constant_and_zero_sum(m3);
  CHECK(!z3.contains(c3));
  CHECK(subspace_sum(c3, z3).dim() == 3);
  CHECK(subspace_intersect(c3, z3).dim() == 0);

  FGModule bare = module_from_gens(Field::get(2, 1),
                                   {MatrixGF::identity(Field::get(2, 1), 2)});
  CHECK(code_of([&] { constant_and_zero_sum(bare); }) == "BadParameter");
}

TEST_CASE("fixed space dimension counts orbits") {
  CHECK(fixed_space(natural_module("S3", 2)).dim() == 1);
  CHECK(fixed_space(natural_module("C6", 3)).dim() == 1);

  // two-orbit action: C2 swapping inside each pair
  GroupAction d;
  d.group = catalog_group("C2");
  d.domain_size = 4;
  d.labels = {"0", "1", "2", "3"};
  d.images = {Permutation({1, 0, 3, 2})};
  d.name = "pairs";
  CHECK(orbits(d).size() == 2);
  CHECK(fixed_space(perm_module(d, Field::get(2, 1))).dim() == 2);

  // identity generators fix everything
  const Field& f = Field::get(3, 1);
  FGModule id = module_from_gens(f, {MatrixGF::identity(f, 4)});
  CHECK(fixed_space(id).dim() == 4);
}

TEST_CASE("restriction and invariance") {
  FGModule m = natural_module("S3", 2);
  auto [c, z] = constant_and_zero_sum(m);
  CHECK(is_invariant(m, z));
  CHECK(is_invariant(m, c));
  CHECK(!is_invariant(m, SubspaceGF::span_of(m.field(), 3, {{1, 0, 0}})));

  FGModule r = restrict_module(m, z);
  CHECK(r.dim == 2);
  CHECK(r.gens.size() == m.gens.size());
  CHECK(chop(r, 0).size() == 1);  // the zero-sum plane is irreducible here

  CHECK(code_of([&] {
          restrict_module(m, SubspaceGF::span_of(m.field(), 3, {{1, 0, 0}}));
        }) == "NotInvariant");
}

TEST_CASE("quotient modules") {
  FGModule m = natural_module("S3", 3);

  auto [same, projid] = quotient_module(m, SubspaceGF::zero(m.field(), 3));
  CHECK(same.dim == 3);
  CHECK(same.gens == m.gens);

  auto [q, proj] = quotient_module(m, constant_and_zero_sum(m).second);
  CHECK(q.dim == 1);
  for (const MatrixGF& g : q.gens) CHECK(g.is_identity());
  CHECK(proj.rows() == 3);
  CHECK(proj.cols() == 1);
}

TEST_CASE("composition factor dimensions") {
  CHECK(chop_dims(natural_module("S3", 2), 0) ==
        std::multiset<std::size_t>{1, 2});
  CHECK(chop_dims(natural_module("S3", 3), 0) ==
        std::multiset<std::size_t>{1, 1, 1});
  CHECK(chop_dims(natural_module("C6", 2), 0) ==
        std::multiset<std::size_t>{1, 1, 2, 2});

  const Field& f = Field::get(5, 1);
  FGModule one = module_from_gens(f, {MatrixGF::identity(f, 1)});
  std::vector<FGModule> fac = chop(one, 0);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].dim == 1);

  // factor dimensions do not depend on the seed
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 99ull}) {
    CHECK(chop_dims(natural_module("S3", 2), seed) ==
          chop_dims(natural_module("S3", 2), 0));
    CHECK(chop_dims(natural_module("C6", 2), seed) ==
          chop_dims(natural_module("C6", 2), 0));
    CHECK(chop_dims(natural_module("S5", 5), seed) ==
          std::multiset<std::size_t>{1, 1, 3});
  }
}

TEST_CASE("hom space from the trivial module") {
  for (const char* name : {"S3", "C6", "5T3"}) {
    FGModule m = natural_module(name, 2);
    const Field& f = m.field();
    std::vector<MatrixGF> triv_gens(m.gens.size(), MatrixGF::identity(f, 1));
    FGModule triv = module_from_gens(f, triv_gens);
    std::vector<MatrixGF> h = hom_space(triv, m);
    CHECK(h.size() == 1);  // transitive, one orbit
    // the image is the fixed line
    CHECK(SubspaceGF::from_rows(h[0]) == fixed_space(m));
  }
}

TEST_CASE("hom space respects the intertwining relation") {
  FGModule m = natural_module("S4", 3);
  auto [c, z] = constant_and_zero_sum(m);
  FGModule s = restrict_module(m, z);
  for (const MatrixGF& x : hom_space(s, m))
    for (std::size_t i = 0; i < s.gens.size(); ++i)
      CHECK(s.gens[i] * x == x * m.gens[i]);
}

TEST_CASE("module isomorphism") {
  FGModule m2 = natural_module("S3", 2);
  auto [c, z] = constant_and_zero_sum(m2);
  FGModule plane = restrict_module(m2, z);
  FGModule triv = module_from_gens(
      m2.field(),
      std::vector<MatrixGF>(m2.gens.size(), MatrixGF::identity(m2.field(), 1)));
  CHECK(modules_isomorphic(triv, triv, 0));
  CHECK(modules_isomorphic(plane, plane, 0));
  CHECK(!modules_isomorphic(triv, plane, 0));
  CHECK(!modules_isomorphic(m2, plane, 0));
}

TEST_CASE("minimal submodules") {
  FGModule m5 = natural_module("S5", 5);
  MinimalSubmodules ms5 = minimal_submodules(m5, 0);
  CHECK(ms5.complete);
  REQUIRE(ms5.subs.size() == 1);
  CHECK(ms5.subs[0] == constant_and_zero_sum(m5).first);

  FGModule m3 = natural_module("S3", 2);
  MinimalSubmodules ms3 = minimal_submodules(m3, 0);
  CHECK(ms3.complete);
  auto [c, z] = constant_and_zero_sum(m3);
  std::vector<SubspaceGF> want{c, z};
  std::sort(want.begin(), want.end());
  CHECK(ms3.subs == want);
}

TEST_CASE("least invariant subspace of dimension at least two") {
  FGModule m5 = natural_module("S5", 5);
  MinDimGe2 r5 = min_dim_ge2_submodule(m5, 0);
  CHECK(r5.complete);
  CHECK(r5.dim == 4);
  CHECK(r5.sub == constant_and_zero_sum(m5).second);

  FGModule m3 = natural_module("S3", 2);
  MinDimGe2 r3 = min_dim_ge2_submodule(m3, 0);
  CHECK(r3.dim == 2);
  CHECK(r3.sub == constant_and_zero_sum(m3).second);

  FGModule m7 = natural_module("PSL32", 2);
  MinDimGe2 r7 = min_dim_ge2_submodule(m7, 0);
  CHECK(r7.complete);
  CHECK(r7.dim == 3);
  CHECK(is_invariant(m7, r7.sub));

  // a two-dimensional module with only one-dimensional minimals still
  // produces the full space
  FGModule c2 = natural_module("C2", 3);
  MinDimGe2 rc = min_dim_ge2_submodule(c2, 0);
  CHECK(rc.dim == 2);
  CHECK(rc.sub == SubspaceGF::full(c2.field(), 2));
}

TEST_CASE("submodule lattice shapes") {
  // uniserial chain: 0 < constants < zero-sum < all
  SubmoduleLattice chain = submodule_lattice(natural_module("S5", 5), 1000, 0);
  CHECK(chain.complete);
  REQUIRE(chain.nodes.size() == 4);
  CHECK(chain.edges.size() == 3);
  CHECK(chain.nodes[0].dim() == 0);
  CHECK(chain.nodes[1].dim() == 1);
  CHECK(chain.nodes[2].dim() == 4);
  CHECK(chain.nodes[3].dim() == 5);

  // direct sum: diamond
  SubmoduleLattice diamond = submodule_lattice(natural_module("S3", 2), 1000, 0);
  CHECK(diamond.complete);
  REQUIRE(diamond.nodes.size() == 4);
  CHECK(diamond.edges.size() == 4);

  const Field& f = Field::get(2, 1);
  FGModule one = module_from_gens(f, {MatrixGF::identity(f, 1)});
  SubmoduleLattice tiny = submodule_lattice(one, 1000, 0);
  CHECK(tiny.nodes.size() == 2);
  CHECK(tiny.edges.size() == 1);

  std::string dump = lattice_dump(diamond);
  CHECK(dump.find("dim=0 basis=") == 0);
  CHECK(dump.find("cover 0 1") != std::string::npos);
}

TEST_CASE("lattice cap behaviour") {
  CHECK(code_of([] {
          submodule_lattice(natural_module("S3", 2), 1, 0);
        }) == "LatticeTooLarge");

  SubmoduleLattice part = submodule_lattice(natural_module("S5", 5), 2, 0);
  CHECK(!part.complete);
  CHECK(part.nodes.size() == 2);
}

TEST_CASE("lattice agrees with exhaustive search") {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.degree > 6 || e.degree < 2) continue;
    for (std::uint32_t q : {2u, 3u}) {
      CAPTURE(e.name);
      CAPTURE(q);
      FGModule m = natural_module(e.name, q);
      SubmoduleLattice lat = submodule_lattice(m, 100000, 0);
      CHECK(lat.complete);
      std::vector<SubspaceGF> want = all_submodules(m);
      REQUIRE(lat.nodes.size() == want.size());
      CHECK(lat.nodes == want);
      CHECK(lat.edges == cover_pairs(want));
    }
  }
}

TEST_CASE("perp of a submodule is a submodule") {
  for (const char* name : {"S4", "C6", "D4", "5T3"}) {
    for (std::uint32_t q : {2u, 3u}) {
      FGModule m = natural_module(name, q);
      SubmoduleLattice lat = submodule_lattice(m, 1000, 0);
      std::set<std::size_t> dims, perp_dims;
      for (const SubspaceGF& u : lat.nodes) {
        CHECK(is_invariant(m, subspace_perp(u)));
        dims.insert(u.dim());
        perp_dims.insert(m.dim - subspace_perp(u).dim());
      }
      CHECK(dims == perp_dims);
    }
  }
}

TEST_CASE("congruence of a spun pair sum") {
  FGModule m = natural_module("C6", 2);
  SubspaceGF u = spin_vector(m, {1, 0, 0, 1, 0, 0});  // e0 + e3
  CHECK(u.dim() == 3);
  std::vector<std::vector<std::uint32_t>> want = {{0, 3}, {1, 4}, {2, 5}};
  CHECK(submodule_congruence(m, u) == want);

  // the zero subspace separates everything
  auto singletons = submodule_congruence(m, SubspaceGF::zero(m.field(), 6));
  CHECK(singletons.size() == 6);

  // the full space identifies everything
  auto lumped = submodule_congruence(m, SubspaceGF::full(m.field(), 6));
  CHECK(lumped.size() == 1);
}

TEST_CASE("congruence classes are permuted by the action") {
  for (const char* name : {"C6", "D4", "4T3", "6T3"}) {
    FGModule m = natural_module(name, 2);
    SubmoduleLattice lat = submodule_lattice(m, 1000, 0);
    for (const SubspaceGF& u : lat.nodes) {
      auto parts = submodule_congruence(m, u);
      std::map<std::uint32_t, std::size_t> part_of;
      for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::uint32_t x : parts[p]) part_of[x] = p;
      for (const Permutation& g : m.action->images)
        for (const auto& part : parts) {
          std::set<std::size_t> hits;
          for (std::uint32_t x : part) hits.insert(part_of[g(x)]);
          CHECK(hits.size() == 1);
        }
    }
  }
}

TEST_SUITE_END();
