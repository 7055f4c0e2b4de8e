#pragma once

#include <vector>

#include "pmqkit/validation.hpp"

namespace pmqkit {

/// Finite group given by an explicit multiplication table.
///
/// Composition convention, used throughout the library: mult(g, h) is
/// "g first, then h". Conjugation is conj(a, b) = b^-1 * a * b, so that
/// conj(conj(a, b), c) = conj(a, mult(b, c)).
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : mult_{{0}}, inverse_{0} {}

  /// Validates the table (associativity, two-sided identity, inverses)
  /// and derives identity/inverses. Throws ValidationError on failure.
  static FiniteGroup from_mult_table(std::vector<std::vector<int>> mult);

  int size() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int mult(int g, int h) const { return mult_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  int conj(int a, int b) const { return mult_[mult_[inverse_[b]][a]][b]; }
  const std::vector<std::vector<int>>& mult_table() const { return mult_; }

  /// Smallest subgroup containing `gens`, as a sorted element list.
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  bool generates(const std::vector<int>& gens) const;

  /// Conjugation orbits, each sorted, ordered by minimal member.
  std::vector<std::vector<int>> conjugacy_classes() const;

  /// True if `subset` is a union of conjugacy classes.
  bool conjugation_closed(const std::vector<int>& subset) const;

  bool operator==(const FiniteGroup& other) const { return mult_ == other.mult_; }

 private:
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Exhaustive check of the group axioms on a raw table.
ValidationReport validate_mult_table(const std::vector<std::vector<int>>& mult);

}  // namespace pmqkit
