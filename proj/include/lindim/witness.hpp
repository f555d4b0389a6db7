#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindim/action.hpp"
#include "lindim/fgmodule.hpp"
#include "lindim/subspace.hpp"

namespace lindim {

// A d-dimensional space affording the action: rho assigns an invertible
// matrix to each group generator and phi embeds the domain so that moving a
// point and then mapping it equals mapping it and then applying rho.
struct WitnessCertificate {
  const Field* f = nullptr;
  std::size_t dim = 0;
  std::vector<MatrixGF> rho;          // one matrix per group generator
  std::vector<std::string> labels;    // domain labels in phi order
  std::vector<std::vector<Fel>> phi;  // one image vector per domain point
  SubspaceGF kernel_sub;              // witness = F^domain / kernel_sub
  std::string method = "general-lattice";
  std::uint64_t seed = 0;
  bool complete = true;

  const Field& field() const { return *f; }
};

struct VerifyReport {
  bool ok = true;
  std::string code;    // IntertwineFailure | NotInjective | NotSpanning
  std::string detail;  // first failing (generator, point) or colliding pair
};

// checks the intertwining identity phi[x^g] = phi[x] * rho[g] for every
// generator and point, injectivity of phi, and that phi spans F^dim
VerifyReport witness_verify(const WitnessCertificate& c, const GroupAction& a);

// witness as the quotient of a permutation module by an invariant subspace;
// phi images are the projections of the standard basis vectors
WitnessCertificate make_witness(const FGModule& m, const GroupAction& a,
                                const SubspaceGF& u, const std::string& method,
                                std::uint64_t seed, bool complete);

// structured text format; round-trips exactly
std::string witness_str(const WitnessCertificate& c);
WitnessCertificate witness_parse(const std::string& text);

// phi from the matrix-group orbit of v, matched to the action's domain by an
// equivariant bijection
std::vector<std::vector<Fel>> afford_from_vector(const FGModule& m,
                                                 const std::vector<Fel>& v,
                                                 const GroupAction& a);

}  // namespace lindim
