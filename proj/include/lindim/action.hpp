#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindim/group.hpp"

namespace lindim {

// A group together with its action on a labelled domain.  images[i] is the
// permutation of the domain induced by group.generators()[i].
struct GroupAction {
  PermGroup group;
  std::size_t domain_size = 0;
  std::vector<std::string> labels;
  std::vector<Permutation> images;
  std::string name;

  PermGroup image_group() const { return PermGroup(domain_size, images); }
};

GroupAction action_natural(const PermGroup& g);
// domain: k-subsets of the natural domain in lexicographic order
GroupAction action_ksubsets(const PermGroup& g, std::size_t k);
// domain: right cosets of the subgroup, found by breadth-first right
// multiplication from the subgroup itself; each coset is identified by its
// least element, labels are discovery indices
GroupAction action_cosets(const PermGroup& g,
                          const std::vector<Permutation>& subgroup_gens);
GroupAction action_regular(const PermGroup& g);
// K wr L on k*l points, point (delta, i) stored at index i*k + delta;
// generators: each K-generator acting in coordinate 0, then each L-generator
// permuting coordinates
GroupAction action_wreath_imprimitive(const PermGroup& k_grp,
                                      const PermGroup& l_grp);
// the same abstract group acting on k^l tuples (first coordinate most
// significant in the domain order)
GroupAction action_wreath_product(const PermGroup& k_grp,
                                  const PermGroup& l_grp);
// domain: partitions of the natural domain into parts of equal size k, each
// part sorted, parts ordered by least element, domain sorted by that form
GroupAction action_uniform_partitions(const PermGroup& g, std::size_t k);

// orbit partition; each orbit sorted, orbits ordered by least element
std::vector<std::vector<std::uint32_t>> orbits(const GroupAction& a);
bool is_transitive(const GroupAction& a);

// smallest block containing {alpha, beta}, as a sorted point list
std::vector<std::uint32_t> minimal_block(const GroupAction& a,
                                         std::uint32_t alpha,
                                         std::uint32_t beta);
bool is_primitive(const GroupAction& a);

// equivariant bijection between the domains of two actions of the same group,
// if one exists; mapping[x] is the b-domain point matching a-domain point x
std::optional<std::vector<std::uint32_t>> actions_equivalent(
    const GroupAction& a, const GroupAction& b);

GroupAction restrict_to_orbit(const GroupAction& a,
                              const std::vector<std::uint32_t>& orbit);

}  // namespace lindim
