#include <algorithm>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "pmqkit/builtins.hpp"
#include "pmqkit/enveloping.hpp"

using namespace pmqkit;

namespace {

// plain reference Smith normal form on small integer matrices
std::vector<long> reference_invariant_factors(std::vector<std::vector<long>> m) {
  std::vector<long> out;
  if (m.empty()) return out;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < rows; ++i)
        while (m[i][t] != 0) {
          long qq = m[i][t] / m[t][t];
          for (int j = t; j < cols; ++j) m[i][j] -= qq * m[t][j];
          if (m[i][t] != 0) {
            std::swap(m[t], m[i]);
            again = true;
          }
        }
      for (int j = t + 1; j < cols; ++j)
        while (m[t][j] != 0) {
          long qq = m[t][j] / m[t][t];
          for (int i = t; i < rows; ++i) m[i][j] -= qq * m[i][t];
          if (m[t][j] != 0) {
            for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
            again = true;
          }
        }
      if (!again) {
        for (int i = t + 1; i < rows && !again; ++i)
          for (int j = t + 1; j < cols && !again; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              again = true;
            }
      }
    }
    out.push_back(std::abs(m[t][t]));
    ++t;
  }
  return out;
}

std::vector<long> library_factors(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<mpz_class>> z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    z[i] = std::vector<mpz_class>(m[i].begin(), m[i].end());
  std::vector<long> out;
  for (const mpz_class& d : smith_invariant_factors(z)) out.push_back(d.get_si());
  return out;
}

}  // namespace

TEST_CASE("smith invariant factors match a reference implementation") {
  CHECK(library_factors({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) ==
        std::vector<long>{2, 2, 156});
  CHECK(library_factors({{1, 0}, {0, 1}}) == std::vector<long>{1, 1});
  CHECK(library_factors({{0, 0}, {0, 0}}).empty());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 5), val(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int r = dim(rng), c = dim(rng);
    std::vector<std::vector<long>> m(r, std::vector<long>(c));
    for (auto& row : m)
      for (auto& x : row) x = val(rng);
    CHECK(library_factors(m) == reference_invariant_factors(m));
  }
}

TEST_CASE("inner automorphism groups of the S3 family") {
  SymmetricGroup s3 = make_symmetric_group(3);

  FinitePMQ one = trivial_pmq(s3.group, {});
  CHECK(inner_automorphism_group(one).order() == 1);

  FinitePMQ complete = complete_pmq(s3.group);
  CHECK(inner_automorphism_group(complete).order() == 6);  // S3 is centerless

  FinitePMQ trans = trivial_pmq(s3.group, s3.transpositions());
  CHECK(inner_automorphism_group(trans).order() == 6);

  FinitePMQ geo = geodesic_pmq(s3);
  CHECK(inner_automorphism_group(geo).order() == 6);
}

TEST_CASE("inner group order obeys Lagrange in the symmetric group of the carrier") {
  SymmetricGroup s3 = make_symmetric_group(3);
  for (const FinitePMQ& q : {trivial_pmq(s3.group, s3.transpositions()),
                             complete_pmq(s3.group), geodesic_pmq(s3)}) {
    std::uint64_t factorial = 1;
    for (int i = 2; i <= q.size(); ++i) factorial *= i;
    CHECK(factorial % inner_automorphism_group(q).order() == 0);
  }
  // the closure honours its budget guard
  CHECK_THROWS_AS(inner_automorphism_group(complete_pmq(s3.group), 3),
                  BudgetExceededError);
}

TEST_CASE("canonical pairs validate for all built-ins") {
  SymmetricGroup s3 = make_symmetric_group(3);
  SymmetricGroup s4 = make_symmetric_group(4);
  for (const FinitePMQ& q : {trivial_pmq(s3.group, {}),
                             trivial_pmq(s3.group, s3.transpositions()),
                             trivial_pmq(s3.group, s3.non_identity()),
                             complete_pmq(s3.group), geodesic_pmq(s3),
                             trivial_pmq(s4.group, s4.transpositions()),
                             geodesic_pmq(s4)}) {
    PMQGroupPair pair = canonical_pair(q);  // from_parts validates
    // composition bookkeeping: e(ab) = e(a)e(b) wherever ab is defined
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b)
        if (q.prod_defined(a, b))
          CHECK(pair.e_map(q.prod(a, b)) ==
                pair.group().mult(pair.e_map(a), pair.e_map(b)));
  }
}

TEST_CASE("abelianization of trivial-product PMQs is free on the classes") {
  SymmetricGroup s3 = make_symmetric_group(3);
  SymmetricGroup s4 = make_symmetric_group(4);
  struct Case {
    FinitePMQ q;
    int k;
  };
  for (const auto& [q, k] :
       {Case{trivial_pmq(s3.group, s3.transpositions()), 1},
        Case{trivial_pmq(s3.group, s3.non_identity()), 2},
        Case{trivial_pmq(s4.group, s4.transpositions()), 1},
        Case{trivial_pmq(s4.group, s4.non_identity()), 4}}) {
    AbelianInvariants inv = enveloping_abelianization(q);
    CHECK(inv.free_rank == k);
    CHECK(inv.torsion.empty());
    CHECK(static_cast<int>(conjugacy_classes(q).size()) == k + 1);
  }
}

TEST_CASE("abelianization of the geodesic S3 PMQ has rank one") {
  SymmetricGroup s3 = make_symmetric_group(3);
  AbelianInvariants inv = enveloping_abelianization(geodesic_pmq(s3));
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion.empty());
}

TEST_CASE("abelianization of one-element and complete PMQs") {
  SymmetricGroup s3 = make_symmetric_group(3);
  CHECK(enveloping_abelianization(trivial_pmq(s3.group, {})) ==
        AbelianInvariants{0, {}});
  // for a complete PMQ the presentation abelianizes to the group's
  // abelianization: Z/2 for both Z/2 and S3
  CHECK(enveloping_abelianization(complete_pmq(cyclic_group(2))) ==
        AbelianInvariants{0, {2}});
  CHECK(enveloping_abelianization(complete_pmq(s3.group)) ==
        AbelianInvariants{0, {2}});
}

TEST_CASE("free rank is bounded by the class count, with equality iff trivial product") {
  SymmetricGroup s4 = make_symmetric_group(4);
  for (const FinitePMQ& q :
       {trivial_pmq(s4.group, s4.non_identity()), geodesic_pmq(s4),
        complete_pmq(s4.group)}) {
    const int k = static_cast<int>(conjugacy_classes(q).size()) - 1;
    AbelianInvariants inv = enveloping_abelianization(q);
    CHECK(inv.free_rank <= k);
    if (q.has_trivial_product()) CHECK(inv.free_rank == k);
  }
}
