#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "pmqkit/aq_ring.hpp"
#include "pmqkit/builtins.hpp"

using namespace pmqkit;

TEST_CASE("ring product: unit, trivial products, geodesic composite") {
  SymmetricGroup s3 = make_symmetric_group(3);

  FinitePMQ trivial = trivial_pmq(s3.group, s3.transpositions());
  AQElement one = aq_generator(trivial, trivial.unit());
  AQElement x = aq_class_sum(trivial, {1, 2, 3});
  CHECK(pmq_ring_product(trivial, one, x) == x);
  CHECK(pmq_ring_product(trivial, x, one) == x);
  CHECK(pmq_ring_product(trivial, aq_generator(trivial, 1), aq_generator(trivial, 2))
            .is_zero());

  FinitePMQ geo = geodesic_pmq(s3);
  const int k12 = 2, k13 = 5;
  AQElement p = pmq_ring_product(geo, aq_generator(geo, k12), aq_generator(geo, k13));
  CHECK(p == aq_generator(geo, s3.group.mult(k12, k13)));
}

TEST_CASE("graded bases of the built-in PMQs") {
  SymmetricGroup s3 = make_symmetric_group(3);

  GradedBasis one = aq_basis(trivial_pmq(s3.group, {}));
  REQUIRE(one.size() == 1);
  CHECK(one.classes[0] == std::vector<int>{0});
  CHECK(one.degrees[0] == 0);

  GradedBasis trans = aq_basis(trivial_pmq(s3.group, s3.transpositions()));
  REQUIRE(trans.size() == 2);
  CHECK(trans.classes[1] == std::vector<int>{1, 2, 3});
  CHECK(trans.degrees == std::vector<int>{0, 2});

  GradedBasis geo = aq_basis(geodesic_pmq(s3));
  REQUIRE(geo.size() == 3);
  CHECK(geo.degrees == std::vector<int>{0, 2, 4});
  CHECK(geo.classes[1] == std::vector<int>{1, 2, 5});  // transpositions
  CHECK(geo.classes[2] == std::vector<int>{3, 4});     // 3-cycles
}

TEST_CASE("structure constants of geodesic S3 against brute force") {
  SymmetricGroup s3 = make_symmetric_group(3);
  FinitePMQ geo = geodesic_pmq(s3);
  StructureConstants sc = aq_structure_constants(geo);
  REQUIRE(sc.basis.size() == 3);
  const int unit_class = 0, t_class = 1, s_class = 2;

  // brute force straight off the tables: count ordered pairs of
  // transpositions whose product lands on each 3-cycle
  std::map<int, long> hits;
  for (int a : sc.basis.classes[t_class])
    for (int b : sc.basis.classes[t_class])
      if (geo.prod_defined(a, b)) ++hits[geo.prod(a, b)];
  REQUIRE(hits.size() == 2);
  for (const auto& [element, count] : hits) {
    CHECK(count == 3);
    CHECK(std::count(sc.basis.classes[s_class].begin(),
                     sc.basis.classes[s_class].end(), element) == 1);
  }

  CHECK(sc.terms[t_class][t_class] ==
        std::vector<std::pair<int, long>>{{s_class, 3}});  // <T><T> = 3<S>
  CHECK(sc.terms[t_class][s_class].empty());               // <T><S> = 0
  CHECK(sc.terms[s_class][s_class].empty());
  // the unit class multiplies as a two-sided unit
  for (int j = 0; j < sc.basis.size(); ++j) {
    CHECK(sc.terms[unit_class][j] == std::vector<std::pair<int, long>>{{j, 1}});
    CHECK(sc.terms[j][unit_class] == std::vector<std::pair<int, long>>{{j, 1}});
  }
}

TEST_CASE("trivial-product PMQs have zero structure constants in positive degree") {
  SymmetricGroup s4 = make_symmetric_group(4);
  StructureConstants sc = aq_structure_constants(trivial_pmq(s4.group, s4.non_identity()));
  for (int i = 1; i < sc.basis.size(); ++i)
    for (int j = 1; j < sc.basis.size(); ++j) CHECK(sc.terms[i][j].empty());
}

TEST_CASE("hilbert series of the built-ins") {
  SymmetricGroup s3 = make_symmetric_group(3);
  SymmetricGroup s4 = make_symmetric_group(4);
  CHECK(hilbert_series(trivial_pmq(s3.group, {}), 4) ==
        std::vector<long>{1, 0, 0, 0, 0});
  CHECK(hilbert_series(trivial_pmq(s3.group, s3.transpositions()), 4) ==
        std::vector<long>{1, 0, 1, 0, 0});
  CHECK(hilbert_series(trivial_pmq(s3.group, s3.non_identity()), 4) ==
        std::vector<long>{1, 0, 2, 0, 0});
  CHECK(hilbert_series(geodesic_pmq(s3), 4) == std::vector<long>{1, 0, 1, 0, 1});
  // S4 classes: transpositions (norm 1), 3-cycles and double transpositions
  // (norm 2), 4-cycles (norm 3)
  CHECK(hilbert_series(geodesic_pmq(s4), 6) ==
        std::vector<long>{1, 0, 1, 0, 2, 0, 1});
}

TEST_CASE("commutativity holds for all built-ins") {
  SymmetricGroup s3 = make_symmetric_group(3);
  SymmetricGroup s4 = make_symmetric_group(4);
  CHECK_FALSE(verify_commutativity(trivial_pmq(s3.group, s3.non_identity())));
  CHECK_FALSE(verify_commutativity(geodesic_pmq(s3)));
  CHECK_FALSE(verify_commutativity(geodesic_pmq(s4)));
  // the grading needs a norm, so unnormed complete PMQs are rejected
  CHECK_THROWS_AS(verify_commutativity(complete_pmq(s3.group)), std::invalid_argument);
}

TEST_CASE("commutativity comes from the pair bijection (a,b) -> (b, a^b)") {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ geo = geodesic_pmq(s4);
  GradedBasis basis = aq_basis(geo);
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j) {
      std::set<std::pair<int, int>> defined, image;
      for (int a : basis.classes[i])
        for (int b : basis.classes[j])
          if (geo.prod_defined(a, b)) {
            defined.insert({a, b});
            image.insert({b, geo.conj(a, b)});
            CHECK(geo.prod(b, geo.conj(a, b)) == geo.prod(a, b));
          }
      // the image consists of defined pairs in S' x S, and the map is injective
      CHECK(image.size() == defined.size());
      for (const auto& [b, ab] : image) {
        CHECK(std::count(basis.classes[j].begin(), basis.classes[j].end(), b) == 1);
        CHECK(std::count(basis.classes[i].begin(), basis.classes[i].end(), ab) == 1);
        CHECK(geo.prod_defined(b, ab));
      }
    }
}

TEST_CASE("pair-based basis agrees with the internal one for canonical actions") {
  SymmetricGroup s3 = make_symmetric_group(3);
  PMQGroupPair pair =
      pair_from_group_subset(s3.group, s3.transpositions(), PmqMode::kTrivial);
  GradedBasis from_pair = aq_basis(pair);
  GradedBasis internal = aq_basis(pair.pmq());
  CHECK(from_pair.classes == internal.classes);
  CHECK(from_pair.degrees == internal.degrees);
}

TEST_CASE("products of invariant elements stay invariant") {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ geo = geodesic_pmq(s4);
  GradedBasis basis = aq_basis(geo);
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j) {
      AQElement p = pmq_ring_product(geo, aq_class_sum(geo, basis.classes[i]),
                                     aq_class_sum(geo, basis.classes[j]));
      // coefficients must be constant along every class
      for (const auto& cls : basis.classes) {
        mpq_class first = p.coeffs.count(cls[0]) ? p.coeffs.at(cls[0]) : 0;
        for (int x : cls) {
          mpq_class c = p.coeffs.count(x) ? p.coeffs.at(x) : 0;
          CHECK(c == first);
        }
      }
    }
}

TEST_CASE("degree additivity is structural") {
  SymmetricGroup s4 = make_symmetric_group(4);
  StructureConstants sc = aq_structure_constants(geodesic_pmq(s4));
  for (int i = 0; i < sc.basis.size(); ++i)
    for (int j = 0; j < sc.basis.size(); ++j)
      for (const auto& [t, c] : sc.terms[i][j]) {
        CHECK(c > 0);
        CHECK(sc.basis.degrees[t] == sc.basis.degrees[i] + sc.basis.degrees[j]);
      }
}

TEST_CASE("parent mismatch is rejected") {
  SymmetricGroup s3 = make_symmetric_group(3);
  FinitePMQ a = trivial_pmq(s3.group, s3.transpositions());
  FinitePMQ b = geodesic_pmq(s3);
  CHECK_THROWS_AS(pmq_ring_product(a, aq_generator(a, 1), aq_generator(b, 1)),
                  std::invalid_argument);
}
