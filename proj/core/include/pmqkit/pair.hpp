#pragma once

#include <vector>

#include "pmqkit/pmq.hpp"

namespace pmqkit {

/// A PMQ together with a finite group acting on it from the right.
/// `e_map` sends PMQ elements to group elements; `r_action[g]` is the
/// permutation of the PMQ carrier given by a -> a^g, extending internal
/// conjugation: act(a, e_map(b)) == conj(a, b).
class PMQGroupPair {
 public:
  /// Throws ValidationError if any pair axiom fails.
  static PMQGroupPair from_parts(FinitePMQ pmq, FiniteGroup group,
                                 std::vector<int> e_map,
                                 std::vector<std::vector<int>> r_action);

  const FinitePMQ& pmq() const { return pmq_; }
  const FiniteGroup& group() const { return group_; }
  int e_map(int a) const { return e_map_[a]; }
  int act(int a, int g) const { return r_action_[g][a]; }
  const std::vector<int>& e_map() const { return e_map_; }
  const std::vector<std::vector<int>>& r_action() const { return r_action_; }

 private:
  PMQGroupPair(FinitePMQ pmq, FiniteGroup group, std::vector<int> e_map,
               std::vector<std::vector<int>> r_action)
      : pmq_(std::move(pmq)),
        group_(std::move(group)),
        e_map_(std::move(e_map)),
        r_action_(std::move(r_action)) {}
  FinitePMQ pmq_;
  FiniteGroup group_;
  std::vector<int> e_map_;
  std::vector<std::vector<int>> r_action_;
};

/// Exhaustive check of the pair axioms; components are assumed individually
/// valid. Non-generation is reported with the proper subgroup reached.
ValidationReport validate_pair(const FinitePMQ& pmq, const FiniteGroup& group,
                               const std::vector<int>& e_map,
                               const std::vector<std::vector<int>>& r_action);

/// Conjugation orbits under the full group action, ordered by minimal member.
std::vector<std::vector<int>> conjugacy_classes(const PMQGroupPair& pair);

/// Builds the pair alongside from_group_subset: e_map is the inclusion
/// (identity map in complete/geodesic mode) and the action is group
/// conjugation. The subset must generate the group for the pair to validate.
PMQGroupPair pair_from_group_subset(const FiniteGroup& group, const std::vector<int>& c,
                                    PmqMode mode,
                                    const std::optional<std::vector<int>>& norm = std::nullopt);

}  // namespace pmqkit
