#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindim/fgmodule.hpp"

namespace lindim {

// composition factors of a fixed composition series, bottom-up; seeded and
// deterministic, errors with ChopBudgetExhausted if splitting keeps failing
std::vector<FGModule> chop(const FGModule& m, std::uint64_t seed);

// basis of {X : rho_s(g) X = X rho_m(g) for all generators g}
std::vector<MatrixGF> hom_space(const FGModule& s, const FGModule& m);

// for simple modules: any nonzero hom is an isomorphism
bool modules_isomorphic(const FGModule& a, const FGModule& b,
                        std::uint64_t seed);

struct MinimalSubmodules {
  std::vector<SubspaceGF> subs;  // sorted canonically
  bool complete;                 // false when a hom space was too big to sweep
};
MinimalSubmodules minimal_submodules(const FGModule& m, std::uint64_t seed);

struct MinDimGe2 {
  std::size_t dim = 0;
  SubspaceGF sub;
  bool complete = true;
};
// least dimension of an invariant subspace of dimension at least 2, with a
// canonical witness subspace
MinDimGe2 min_dim_ge2_submodule(const FGModule& m, std::uint64_t seed);

struct SubmoduleLattice {
  std::vector<SubspaceGF> nodes;  // sorted by (dim, basis)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covering pairs
  bool complete = true;
  std::size_t cap = 0;
};
SubmoduleLattice submodule_lattice(const FGModule& m, std::size_t cap,
                                   std::uint64_t seed);
std::string lattice_dump(const SubmoduleLattice& lat);

}  // namespace lindim
