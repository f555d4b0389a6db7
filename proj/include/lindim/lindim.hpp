#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lindim/action.hpp"
#include "lindim/gfq.hpp"
#include "lindim/subspace.hpp"
#include "lindim/witness.hpp"

namespace lindim {

inline constexpr std::size_t kDefaultLatticeCap = 100000;

// Least dimension of a space affording the action, or an interval when the
// submodule search had to be capped.  lo == hi exactly when complete.
struct LinDimResult {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool complete = true;
  std::string method = "general-lattice";
  std::uint64_t seed = 0;
  std::optional<WitnessCertificate> witness;

  std::size_t value() const;  // BadParameter on interval results
};

// true iff no difference e_a - e_b of distinct standard basis vectors lies
// in u; quotients by separating subspaces keep all domain points distinct
bool separating(const SubspaceGF& u, std::size_t n);

// domain size minus the largest separating node of the submodule lattice;
// degrades to an interval when the lattice was capped
LinDimResult lindim_general(const GroupAction& a, const Field& f,
                            std::size_t cap = kDefaultLatticeCap,
                            std::uint64_t seed = 0);

// primitive non-cyclic shortcut: the answer is the least dimension of an
// invariant subspace of dimension at least 2, witnessed by the quotient by
// its perp
LinDimResult lindim_primitive(const GroupAction& a, const Field& f,
                              std::uint64_t seed = 0);

// independent verifier: spins every vector of F^N (q^N <= 2^20) and closes
// under sums, so the submodule enumeration needs no other machinery
LinDimResult lindim_oracle(const GroupAction& a, const Field& f);

// primitive fast path when it applies, general lattice otherwise
LinDimResult lindim_auto(const GroupAction& a, const Field& f,
                         std::size_t cap = kDefaultLatticeCap,
                         std::uint64_t seed = 0);

}  // namespace lindim
