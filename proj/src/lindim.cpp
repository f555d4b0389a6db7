#include "lindim/lindim.hpp"

#include <algorithm>
#include <set>

#include "lindim/error.hpp"
#include "lindim/fgmodule.hpp"
#include "lindim/meataxe.hpp"

namespace lindim {

std::size_t LinDimResult::value() const {
  if (!complete) fail("BadParameter", "interval result has no single value");
  return hi;
}

bool separating(const SubspaceGF& u, std::size_t n) {
  if (u.ambient() != n) fail("BadParameter", "ambient dimension mismatch");
  if (u.dim() == 0) return true;
  const Field& f = u.field();
  std::vector<Fel> diff(n, 0);
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      diff[a] = 1;
      diff[b] = f.sub(0, 1);
      bool inside = u.contains_vector(diff);
      diff[a] = 0;
      diff[b] = 0;
      if (inside) return false;
    }
  return true;
}

namespace {

// nodes must be sorted; the scan keeps the first, hence canonically least,
// subspace of the winning dimension
const SubspaceGF* best_separating(const std::vector<SubspaceGF>& nodes,
                                  std::size_t n) {
  const SubspaceGF* best = nullptr;
  for (const SubspaceGF& u : nodes)
    if ((best == nullptr || u.dim() > best->dim()) && separating(u, n))
      best = &u;
  return best;
}

LinDimResult finish(const FGModule& m, const GroupAction& a,
                    const SubspaceGF& best, LinDimResult r) {
  r.witness = make_witness(m, a, best, r.method, r.seed, r.complete);
  VerifyReport rep = witness_verify(*r.witness, a);
  if (!rep.ok)
    fail("InternalError",
         "constructed witness failed verification: " + rep.code);
  return r;
}

}  // namespace

LinDimResult lindim_general(const GroupAction& a, const Field& f,
                            std::size_t cap, std::uint64_t seed) {
  if (a.domain_size < 1) fail("BadParameter", "empty domain");
  const std::size_t n = a.domain_size;
  FGModule m = perm_module(a, f);

  std::vector<SubspaceGF> nodes{SubspaceGF::zero(f, n)};
  bool complete = false;
  try {
    SubmoduleLattice lat = submodule_lattice(m, cap, seed);
    nodes = lat.nodes;
    complete = lat.complete;
  } catch (const Error& e) {
    if (e.code() != "LatticeTooLarge") throw;
  }

  LinDimResult r;
  r.method = "general-lattice";
  r.seed = seed;
  r.complete = complete;
  const SubspaceGF* best = best_separating(nodes, n);
  r.hi = n - best->dim();
  if (complete) {
    r.lo = r.hi;
  } else {
    std::size_t lo = n > 1 ? 1 : 0;
    if (!is_transitive(a))
      for (const auto& orbit : orbits(a))
        if (orbit.size() > 1) {
          LinDimResult sub =
              lindim_general(restrict_to_orbit(a, orbit), f, cap, seed);
          lo = std::max(lo, sub.lo);
        }
    r.lo = std::min(lo, r.hi);
  }
  return finish(m, a, *best, std::move(r));
}

LinDimResult lindim_primitive(const GroupAction& a, const Field& f,
                              std::uint64_t seed) {
  if (!is_transitive(a)) fail("NotTransitive", "the action is intransitive");
  if (!is_primitive(a))
    fail("NotPrimitive", "the action has a nontrivial block system");
  if (a.image_group().is_cyclic())
    fail("UseGeneralPath", "cyclic induced group needs the lattice search");

  FGModule m = perm_module(a, f);
  MinDimGe2 w = min_dim_ge2_submodule(m, seed);
  if (!w.complete)
    fail("UseGeneralPath", "minimal submodule enumeration was incomplete");

  LinDimResult r;
  r.method = "primitive-fastpath";
  r.seed = seed;
  r.complete = true;
  r.lo = r.hi = w.dim;
  return finish(m, a, subspace_perp(w.sub), std::move(r));
}

LinDimResult lindim_oracle(const GroupAction& a, const Field& f) {
  if (a.domain_size < 1) fail("BadParameter", "empty domain");
  const std::size_t n = a.domain_size;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= f.q();
    if (total > (1u << 20))
      fail("TooLargeForOracle", "q^N exceeds 2^20");
  }

  FGModule m = perm_module(a, f);
  std::set<SubspaceGF> subs;
  subs.insert(SubspaceGF::zero(f, n));
  for (std::uint64_t t = 1; t < total; ++t) {
    std::vector<Fel> v(n);
    std::uint64_t rest = t;
    for (std::size_t i = 0; i < n; ++i) {
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

  std::vector<SubspaceGF> nodes(subs.begin(), subs.end());
  LinDimResult r;
  r.method = "oracle";
  r.seed = 0;
  r.complete = true;
  const SubspaceGF* best = best_separating(nodes, n);
  r.lo = r.hi = n - best->dim();
  return finish(m, a, *best, std::move(r));
}

LinDimResult lindim_auto(const GroupAction& a, const Field& f, std::size_t cap,
                         std::uint64_t seed) {
  if (a.domain_size >= 3 && is_transitive(a) && is_primitive(a)) {
    try {
      return lindim_primitive(a, f, seed);
    } catch (const Error& e) {
      if (e.code() != "UseGeneralPath") throw;
    }
  }
  return lindim_general(a, f, cap, seed);
}

}  // namespace lindim
