#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "lindim/action.hpp"
#include "lindim/matrix.hpp"
#include "lindim/subspace.hpp"

namespace lindim {

// Module over a group algebra, one invertible matrix per group generator.
// Vectors are rows and generators act from the right: v -> v * gens[i].
struct FGModule {
  const Field* f = nullptr;
  std::size_t dim = 0;
  std::vector<MatrixGF> gens;
  std::shared_ptr<const GroupAction> action;  // provenance if built from one

  const Field& field() const { return *f; }
};

// validates invertibility of every generator
FGModule module_from_gens(const Field& f, std::vector<MatrixGF> gens);

// permutation module: gens[i][w][w^g] = 1
FGModule perm_module(const GroupAction& a, const Field& f);

// least invariant subspace containing the seed rows
SubspaceGF spin(const FGModule& m, const MatrixGF& seeds);
SubspaceGF spin_vector(const FGModule& m, const std::vector<Fel>& seed);

// the all-ones line and its perp, the zero-coordinate-sum hyperplane
std::pair<SubspaceGF, SubspaceGF> constant_and_zero_sum(const FGModule& m);

// row vectors fixed by every generator
SubspaceGF fixed_space(const FGModule& m);

bool is_invariant(const FGModule& m, const SubspaceGF& u);

// module on u itself, in the coordinates of u's canonical basis
FGModule restrict_module(const FGModule& m, const SubspaceGF& u);

// quotient module and the dim x (dim - dim u) projection matrix
std::pair<FGModule, MatrixGF> quotient_module(const FGModule& m,
                                              const SubspaceGF& u);

// partition of the domain by e_a - e_b in u; parts sorted, by least element
std::vector<std::vector<std::uint32_t>> submodule_congruence(
    const FGModule& m, const SubspaceGF& u);

}  // namespace lindim
