#pragma once

#include <gmpxx.h>

#include <vector>

namespace pmqkit {

/// Invariant factors of an integer matrix: the nonzero diagonal of its
/// Smith normal form, each positive and dividing the next.
std::vector<mpz_class> smith_invariant_factors(std::vector<std::vector<mpz_class>> m);

/// Invariants of the abelian group Z^cols / (row span): free rank and the
/// torsion coefficients (invariant factors > 1).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long> torsion;

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants cokernel_invariants(const std::vector<std::vector<mpz_class>>& rows,
                                      int cols);

}  // namespace pmqkit
