#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "pmqkit/builtins.hpp"
#include "pmqkit/hurwitz.hpp"

using namespace pmqkit;

// S3 element indices in one-line lex order: 1=(23), 2=(12), 3=(123), 4=(132), 5=(13)
namespace {
const int k12 = 2, k13 = 5, k23 = 1;
}

TEST_CASE("the braid move preserves left-to-right products by convention") {
  // mult(a, b) == mult(b, conj(a, b)) pins conj(a, b) = b^-1 a b together
  // with the composition order
  SymmetricGroup s4 = make_symmetric_group(4);
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b)
      CHECK(s4.group.mult(a, b) == s4.group.mult(b, s4.group.conj(a, b)));
}

TEST_CASE("single moves") {
  SymmetricGroup s3 = make_symmetric_group(3);
  CHECK(hurwitz_move(s3.group, {k12, k12}, 0) == Tuple{k12, k12});
  CHECK(hurwitz_move(s3.group, {k12, k13}, 0) == Tuple{k13, k23});
  CHECK_THROWS_AS(hurwitz_move(s3.group, {k12, k13}, 1), std::out_of_range);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> elem(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Tuple t(5);
    for (int& x : t) x = elem(rng);
    for (int i = 0; i + 1 < 5; ++i) {
      CHECK(hurwitz_move(s3.group, hurwitz_move(s3.group, t, i), i, true) == t);
      CHECK(hurwitz_move(s3.group, hurwitz_move(s3.group, t, i, true), i) == t);
    }
  }
}

TEST_CASE("orbits of transposition pairs in S3") {
  SymmetricGroup s3 = make_symmetric_group(3);
  auto orbits = enumerate_orbits(s3.group, s3.transpositions(), 2);
  CHECK(orbits.size() == 5);  // three doubled pairs, one orbit per 3-cycle product
  std::uint64_t total = 0;
  for (const auto& o : orbits) total += o.size;
  CHECK(total == 9);
  // the doubled pair is a singleton
  for (const auto& o : orbits)
    if (o.rep[0] == o.rep[1]) CHECK(o.size == 1);

  OrbitOptions fix_id;
  fix_id.fix_total_product = s3.group.identity();
  auto fibre = enumerate_orbits(s3.group, s3.transpositions(), 2, fix_id);
  REQUIRE(fibre.size() == 3);
  for (const auto& o : fibre) {
    CHECK(o.size == 1);
    CHECK(o.rep[0] == o.rep[1]);
  }
}

TEST_CASE("empty tuples") {
  SymmetricGroup s3 = make_symmetric_group(3);
  auto orbits = enumerate_orbits(s3.group, s3.transpositions(), 0);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].total_product == s3.group.identity());
  CHECK(orbits[0].subgroup_order == 1);
  CHECK(orbits[0].classes.empty());
}

TEST_CASE("nielsen invariants of ((12),(13))") {
  SymmetricGroup s3 = make_symmetric_group(3);
  TupleInvariants inv = tuple_invariants(s3.group, {k12, k13});
  // the product is a 3-cycle and the pair generates all of S3
  int p = inv.total_product;
  CHECK(p != s3.group.identity());
  CHECK(s3.group.mult(s3.group.mult(p, p), p) == s3.group.identity());
  CHECK(inv.subgroup_order == 6);
}

TEST_CASE("invariants are constant across orbits (S3 transpositions, n <= 4)") {
  SymmetricGroup s3 = make_symmetric_group(3);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& orbit : enumerate_orbits(s3.group, s3.transpositions(), n)) {
      // walk the whole orbit from the representative
      std::vector<Tuple> seen{orbit.rep};
      for (std::size_t head = 0; head < seen.size(); ++head)
        for (int i = 0; i + 1 < n; ++i) {
          Tuple next = hurwitz_move(s3.group, seen[head], i);
          if (std::find(seen.begin(), seen.end(), next) == seen.end())
            seen.push_back(next);
        }
      CHECK(seen.size() == orbit.size);
      for (const Tuple& t : seen) {
        TupleInvariants inv = tuple_invariants(s3.group, t);
        CHECK(inv.total_product == orbit.total_product);
        CHECK(inv.classes == orbit.classes);
        CHECK(inv.subgroup_order == orbit.subgroup_order);
      }
    }
  }
}

TEST_CASE("fibre counts partition the unconstrained count") {
  SymmetricGroup s3 = make_symmetric_group(3);
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_orbits(s3.group, s3.non_identity(), n);
    std::size_t fibre_total = 0;
    for (int g = 0; g < s3.group.size(); ++g) {
      OrbitOptions opt;
      opt.fix_total_product = g;
      fibre_total += enumerate_orbits(s3.group, s3.non_identity(), n, opt).size();
    }
    CHECK(fibre_total == all.size());
  }
}

TEST_CASE("budget and closure errors") {
  SymmetricGroup s4 = make_symmetric_group(4);
  OrbitOptions tiny;
  tiny.budget = 100;
  CHECK_THROWS_AS(enumerate_orbits(s4.group, s4.transpositions(), 5, tiny),
                  BudgetExceededError);
  // a non-conjugation-closed subset is rejected: a single transposition
  CHECK_THROWS_AS(enumerate_orbits(s4.group, {s4.transpositions()[0]}, 2),
                  std::invalid_argument);
}

TEST_CASE("pmq orbit counts agree with group orbit counts on trivial PMQs") {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ q = trivial_pmq(s4.group, s4.transpositions());
  for (int n = 0; n <= 3; ++n) {
    CHECK(enumerate_pmq_orbits(q, n).orbit_count ==
          enumerate_orbits(s4.group, s4.transpositions(), n).size());
  }
}
