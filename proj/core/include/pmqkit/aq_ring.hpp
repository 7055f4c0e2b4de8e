#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pmqkit/pair.hpp"

namespace pmqkit {

/// A rational linear combination of PMQ elements. Zero coefficients are
/// never stored; arithmetic is exact throughout.
struct AQElement {
  std::uint64_t parent_digest = 0;
  std::map<int, mpq_class> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const AQElement&) const = default;
};

AQElement aq_zero(const FinitePMQ& q);
/// The generator <a>.
AQElement aq_generator(const FinitePMQ& q, int element);
/// The class sum <S> for a set of elements.
AQElement aq_class_sum(const FinitePMQ& q, const std::vector<int>& elements);
AQElement aq_add(const FinitePMQ& q, const AQElement& x, const AQElement& y);
AQElement aq_scale(const FinitePMQ& q, const mpq_class& c, const AQElement& x);

/// Bilinear extension of <a><b> = <ab> when ab is defined and 0 otherwise.
AQElement pmq_ring_product(const FinitePMQ& q, const AQElement& x, const AQElement& y);

/// Conjugacy classes with their even degrees 2*norm, ordered by
/// (degree, minimal element). The unit class sits alone in degree 0.
struct GradedBasis {
  std::vector<std::vector<int>> classes;
  std::vector<int> degrees;

  int size() const { return static_cast<int>(classes.size()); }
  /// Index of the basis class containing `element`, or -1.
  int class_of(int element) const;
};

GradedBasis aq_basis(const FinitePMQ& q);
GradedBasis aq_basis(const PMQGroupPair& pair);

/// The tensor of natural numbers with <S><S'> = sum_T c[S][S'][T] <T>.
/// Entries are stored sparsely as (T, coefficient), sorted by T.
struct StructureConstants {
  GradedBasis basis;
  std::vector<std::vector<std::vector<std::pair<int, long>>>> terms;

  long coefficient(int s, int s_prime, int t) const;
};

/// Computes all products of basis classes, asserting that each product is
/// again a combination of class sums (conjugation invariance) and that
/// degrees add. A failure of either is reported as std::logic_error.
StructureConstants aq_structure_constants(const FinitePMQ& q);
StructureConstants aq_structure_constants(const PMQGroupPair& pair);

/// Coefficient list of the Poincare series: entry 2v counts the conjugacy
/// classes of norm v, odd entries are zero.
std::vector<long> hilbert_series(const FinitePMQ& q, int max_degree);
std::vector<long> hilbert_series(const PMQGroupPair& pair, int max_degree);

/// Checks <S><S'> = <S'><S> for all basis pairs; returns the first failing
/// pair, or nullopt when the ring is commutative.
std::optional<std::pair<int, int>> verify_commutativity(const FinitePMQ& q);
std::optional<std::pair<int, int>> verify_commutativity(const PMQGroupPair& pair);

}  // namespace pmqkit
