#pragma once

#include <vector>

#include "pmqkit/pair.hpp"
#include "pmqkit/pmq.hpp"

namespace pmqkit {

/// The symmetric group on n points, elements enumerated in lexicographic
/// one-line order (index 0 is the identity). `reflection_length[g]` is the
/// minimal number of transpositions multiplying to g, i.e. n minus the
/// number of cycles of g; it is the intrinsic norm of the geodesic PMQ.
struct SymmetricGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;
  std::vector<int> reflection_length;

  std::vector<int> elements_of_length(int len) const;
  std::vector<int> transpositions() const { return elements_of_length(1); }
  std::vector<int> non_identity() const;
};

SymmetricGroup make_symmetric_group(int n);

FiniteGroup cyclic_group(int n);

/// All subgroups as sorted element lists, deterministically ordered by
/// (order, elements). Intended for small groups only.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& group);

/// The abstract group on a subgroup's elements, re-indexed by the position
/// of each element in the (sorted) list.
FiniteGroup subgroup_group(const FiniteGroup& group, const std::vector<int>& elements);

FinitePMQ trivial_pmq(const FiniteGroup& group, const std::vector<int>& c);
FinitePMQ complete_pmq(const FiniteGroup& group);
FinitePMQ geodesic_pmq(const SymmetricGroup& sym);

}  // namespace pmqkit
