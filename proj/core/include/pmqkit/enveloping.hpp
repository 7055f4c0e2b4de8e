#pragma once

#include "pmqkit/pair.hpp"
#include "pmqkit/smith.hpp"

namespace pmqkit {

/// The subgroup of Sym(carrier) generated by the conjugation maps
/// a -> conj(a, g), one generator per PMQ element. Multiplication follows
/// the library convention mult(g, h) = "g first, then h", so that
/// e_bar(prod(a, b)) == mult(e_bar(a), e_bar(b)).
struct InnerAutomorphismGroup {
  FiniteGroup group;
  /// perms[i] is the carrier permutation of group element i, lex-sorted.
  std::vector<std::vector<int>> perms;
  /// e_bar[a] = index of the permutation x -> conj(x, a).
  std::vector<int> e_bar;

  std::uint64_t order() const { return perms.size(); }
};

InnerAutomorphismGroup inner_automorphism_group(const FinitePMQ& q,
                                                std::uint64_t budget = kDefaultStateBudget);

/// The pair (Q, inner automorphism group, e_bar, right action by evaluation).
/// Always passes validate_pair, including the generation hypothesis.
PMQGroupPair canonical_pair(const FinitePMQ& q);

/// Abelian invariants of the group presented on the non-unit elements by
/// the relations a = a^b for all a, b and a + b = c for every defined
/// product ab = c (the c term is dropped when ab is the unit).
AbelianInvariants enveloping_abelianization(const FinitePMQ& q);

/// The relation matrix used by enveloping_abelianization; columns are
/// indexed by q.q_plus() in order. Exposed for verification.
std::vector<std::vector<mpz_class>> enveloping_relation_matrix(const FinitePMQ& q);

}  // namespace pmqkit
