#pragma once

#include <vector>

#include "pmqkit/pair.hpp"

namespace pmqkit {

/// The free graded-commutative model attached to a trivial-product PMQ:
/// one polynomial generator x_S in degree 2 and one exterior generator y_S
/// in degree 3 per non-unit conjugacy class S, with d(x_S) = 0 and
/// d(y_S) = x_S^2.
struct SullivanModel {
  std::vector<std::vector<int>> classes;  // non-unit conjugacy classes

  int generator_pairs() const { return static_cast<int>(classes.size()); }
};

/// Rejects PMQs with any product defined between non-unit elements.
SullivanModel sullivan_model(const FinitePMQ& q);
SullivanModel sullivan_model(const PMQGroupPair& pair);

/// Dimensions of the model's cohomology per degree, by exact Gaussian
/// elimination over the rationals on the truncated monomial basis. The
/// differential is verified to square to zero on the whole basis.
std::vector<long> model_cohomology(const SullivanModel& model, int max_degree,
                                   std::size_t monomial_budget = 100000);

/// d(d(m)) == 0 for every monomial of degree <= max_degree.
bool model_d_squared_is_zero(const SullivanModel& model, int max_degree,
                             std::size_t monomial_budget = 100000);

/// Betti numbers after the double degree shift: an exterior algebra on one
/// degree-1 class per generator pair, restricted to one component, so
/// Betti_i = C(k, i). Rejects nontrivial products.
std::vector<long> loop_twice_betti(const FinitePMQ& q, int max_degree);
std::vector<long> loop_twice_betti(const PMQGroupPair& pair, int max_degree);

/// Verification path for the double loop: cohomology of the degree-shifted
/// model on its unit component (k odd generators in degree 1, zero
/// differential), computed with the same elimination engine.
std::vector<long> looped_exterior_cohomology(int k, int max_degree,
                                             std::size_t monomial_budget = 100000);

/// Stable Betti numbers of the Hurwitz spaces with monodromies in c: builds
/// the trivial-product PMQ on c, counts the conjugacy classes k of c under
/// the full group, and emits the exterior-algebra dimensions. Requires c
/// conjugation-closed, identity-free, and generating.
struct StableBettiReport {
  int class_count = 0;
  std::vector<std::vector<int>> classes;  // classes of c, as group elements
  std::vector<long> betti;
};

StableBettiReport stable_hurwitz_betti(const FiniteGroup& group,
                                       const std::vector<int>& c, int max_degree);

}  // namespace pmqkit
