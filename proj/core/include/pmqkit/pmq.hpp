#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmqkit/finite_group.hpp"
#include "pmqkit/validation.hpp"

namespace pmqkit {

/// Sentinel for an undefined entry of the partial product table.
inline constexpr int kUndefined = -1;

/// Raw tables of a finite partially multiplicative quandle.
/// Elements are dense indices 0..size-1; `prod` entries may be kUndefined.
struct PmqTables {
  int size = 0;
  int unit = 0;
  std::vector<std::vector<int>> conj;
  std::vector<std::vector<int>> prod;
  std::optional<std::vector<int>> norm;
};

/// Exhaustive axiom check over all element triples. Returns one violation
/// per failed axiom id, with the lexicographically smallest witness.
ValidationReport validate_pmq(const PmqTables& tables);

/// A validated finite PMQ. Immutable; all operations on it are pure.
class FinitePMQ {
 public:
  /// Throws ValidationError if the tables fail any axiom.
  static FinitePMQ from_tables(PmqTables tables);

  int size() const { return tables_.size; }
  int unit() const { return tables_.unit; }

  /// conj(a, b) = a^b. For each b this is a bijection of the carrier.
  int conj(int a, int b) const { return tables_.conj[a][b]; }
  /// Unique x with x^b = y.
  int conj_preimage(int y, int b) const { return conj_inv_[y][b]; }

  int prod(int a, int b) const { return tables_.prod[a][b]; }
  bool prod_defined(int a, int b) const { return tables_.prod[a][b] != kUndefined; }

  bool has_norm() const { return tables_.norm.has_value(); }
  int norm(int a) const { return (*tables_.norm)[a]; }
  int max_norm() const;

  /// No two non-units multiply to the unit.
  bool is_augmented() const;
  /// True if prod(a, b) is undefined for all non-unit a, b.
  bool has_trivial_product() const;

  /// Non-unit element indices, ascending.
  std::vector<int> q_plus() const;

  const PmqTables& tables() const { return tables_; }

  /// Stable content hash; used to detect mismatched parents of derived values.
  std::uint64_t digest() const { return digest_; }

  bool operator==(const FinitePMQ& other) const { return digest_ == other.digest_; }

 private:
  FinitePMQ() = default;
  PmqTables tables_;
  std::vector<std::vector<int>> conj_inv_;
  std::uint64_t digest_ = 0;
};

/// Conjugation orbits under all internal conjugations a -> a^b,
/// each sorted, ordered by minimal member.
std::vector<std::vector<int>> conjugacy_classes(const FinitePMQ& q);

enum class PmqMode { kTrivial, kComplete, kGeodesic };

/// Builds a PMQ from a group and a conjugation-closed subset.
///
///  - kTrivial:  carrier c + fresh unit, products defined only against the
///               unit, norm 1 on c. Requires the group identity not in c.
///  - kComplete: carrier = G, total product, no norm. `c` is ignored.
///  - kGeodesic: carrier = G, supplied norm, prod(a, b) = ab exactly when
///               norm(a) + norm(b) = norm(ab).
///
/// The result is validated; construction problems surface as ValidationError
/// (axioms) or std::invalid_argument (ill-formed arguments).
FinitePMQ from_group_subset(const FiniteGroup& group, const std::vector<int>& c,
                            PmqMode mode,
                            const std::optional<std::vector<int>>& norm = std::nullopt);

}  // namespace pmqkit
