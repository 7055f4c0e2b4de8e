#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmqkit/pmq.hpp"

namespace pmqkit {

using Tuple = std::vector<int>;

/// One orbit of the braid action (..., a, b, ...) -> (..., b, a^b, ...) on
/// tuples, with its Nielsen invariants. The representative is the lex-least
/// member; `classes` is the sorted multiset of conjugacy-class indices of
/// the entries and `subgroup_order` the order of the subgroup they generate.
struct HurwitzOrbit {
  Tuple rep;
  std::uint64_t size = 0;
  int total_product = 0;
  std::vector<int> classes;
  std::uint64_t subgroup_order = 0;
};

/// Applies the braid move at position i; `inverse` applies its two-sided
/// inverse (a, b) -> (c, a) with c^a = b. Entries must lie in the group.
Tuple hurwitz_move(const FiniteGroup& group, const Tuple& t, int i, bool inverse = false);

/// Same move on tuples of PMQ elements, using the PMQ conjugation table.
Tuple hurwitz_move(const FinitePMQ& q, const Tuple& t, int i, bool inverse = false);

struct OrbitOptions {
  std::optional<int> fix_total_product;
  std::uint64_t budget = kDefaultStateBudget;
};

/// Partition of c^n (or of the fibre with the given total product) into
/// braid orbits, sorted by representative. `c` must be conjugation-closed.
std::vector<HurwitzOrbit> enumerate_orbits(const FiniteGroup& group,
                                           const std::vector<int>& c, int n,
                                           const OrbitOptions& options = {});

/// Total product (left to right), sorted class multiset, and generated
/// subgroup order of a single tuple.
struct TupleInvariants {
  int total_product = 0;
  std::vector<int> classes;
  std::uint64_t subgroup_order = 0;
};

TupleInvariants tuple_invariants(const FiniteGroup& group, const Tuple& t);

/// Braid orbits on n-tuples of non-unit PMQ elements; this uses only the
/// conjugation table, no group is involved.
struct PmqOrbitSummary {
  std::uint64_t orbit_count = 0;
  std::vector<Tuple> reps;
};

PmqOrbitSummary enumerate_pmq_orbits(const FinitePMQ& q, int n,
                                     std::uint64_t budget = kDefaultStateBudget);

}  // namespace pmqkit
