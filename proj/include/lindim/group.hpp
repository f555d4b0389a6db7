#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lindim/perm.hpp"

namespace lindim {

// Stabilizer chain.  Base points run in increasing natural order (only points
// with a nontrivial orbit at their level get stored); an optional pinned first
// base point supports stabilizer extraction.  Construction is the classic
// deterministic Schreier-Sims: residues of Schreier generators are inserted at
// the level of their least moved point, levels are verified bottom-up.
class StabChain {
 public:
  struct Level {
    std::uint32_t beta;
    std::vector<Permutation> gens;  // stored gens with least moved point beta
    std::vector<std::uint32_t> orbit;      // BFS discovery order, orbit[0] = beta
    std::vector<Permutation> transversal;  // transversal[k] maps beta to orbit[k]
    std::vector<std::int64_t> pos;         // point -> orbit index, or -1
  };

  static StabChain build(std::size_t degree,
                         const std::vector<Permutation>& gens,
                         std::optional<std::uint32_t> pin_first = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  // divides out transversal representatives level by level; the result is the
  // identity exactly when g belongs to the group
  Permutation sift(const Permutation& g) const;
  // generators of the stabilizer of the pinned first base point: everything
  // stored below level 0
  std::vector<Permutation> tail_generators() const;

  // least element of (group)*g in image-tuple order; needs a chain without a
  // pinned base point
  Permutation min_coset_rep(const Permutation& g) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool is_abelian() const;
  // exact: abelian with lcm of generator orders equal to the group order
  bool is_cyclic() const;
  std::vector<Permutation> point_stabilizer_generators(std::uint32_t alpha) const;
  Permutation min_coset_rep(const Permutation& g) const;
  const StabChain& chain() const;

  bool same_generators(const PermGroup& o) const {
    return degree_ == o.degree_ && gens_ == o.gens_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  mutable std::shared_ptr<const StabChain> chain_;
};

}  // namespace lindim
