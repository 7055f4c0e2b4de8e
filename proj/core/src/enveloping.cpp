#include "pmqkit/enveloping.hpp"

#include <algorithm>
#include <map>

namespace pmqkit {

InnerAutomorphismGroup inner_automorphism_group(const FinitePMQ& q,
                                                std::uint64_t budget) {
  const int n = q.size();
  std::vector<std::vector<int>> generators;
  generators.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = q.conj(x, a);
    generators.push_back(std::move(perm));
  }
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> elements;
  std::vector<int> identity(n);
  for (int x = 0; x < n; ++x) identity[x] = x;
  seen[identity] = 0;
  elements.push_back(identity);
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& cur : frontier)
      for (const auto& gen : generators) {
        std::vector<int> composed(n);
        for (int x = 0; x < n; ++x) composed[x] = gen[cur[x]];  // cur, then gen
        if (seen.emplace(composed, 0).second) {
          if (elements.size() >= budget)
            throw BudgetExceededError(elements.size() + 1, budget);
          elements.push_back(composed);
          next.push_back(std::move(composed));
        }
      }
    frontier = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) seen[elements[i]] = i;

  const int order = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      std::vector<int> composed(n);
      for (int x = 0; x < n; ++x) composed[x] = elements[h][elements[g][x]];
      mult[g][h] = seen.at(composed);
    }

  InnerAutomorphismGroup out;
  out.group = FiniteGroup::from_mult_table(std::move(mult));
  out.e_bar.resize(n);
  for (int a = 0; a < n; ++a) out.e_bar[a] = seen.at(generators[a]);
  out.perms = std::move(elements);
  return out;
}

PMQGroupPair canonical_pair(const FinitePMQ& q) {
  InnerAutomorphismGroup inner = inner_automorphism_group(q);
  std::vector<std::vector<int>> r_action = inner.perms;
  return PMQGroupPair::from_parts(q, std::move(inner.group), std::move(inner.e_bar),
                                  std::move(r_action));
}

std::vector<std::vector<mpz_class>> enveloping_relation_matrix(const FinitePMQ& q) {
  const std::vector<int> qp = q.q_plus();
  const int m = static_cast<int>(qp.size());
  std::vector<int> col(q.size(), -1);
  for (int i = 0; i < m; ++i) col[qp[i]] = i;

  std::vector<std::vector<mpz_class>> rows;
  for (int a : qp)
    for (int b : qp) {
      const int ab = q.conj(a, b);
      if (ab != a) {
        std::vector<mpz_class> row(m, 0);
        row[col[a]] += 1;
        row[col[ab]] -= 1;
        rows.push_back(std::move(row));
      }
      if (q.prod_defined(a, b)) {
        const int c = q.prod(a, b);
        std::vector<mpz_class> row(m, 0);
        row[col[a]] += 1;
        row[col[b]] += 1;
        if (c != q.unit()) row[col[c]] -= 1;
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

AbelianInvariants enveloping_abelianization(const FinitePMQ& q) {
  const int m = static_cast<int>(q.q_plus().size());
  return cokernel_invariants(enveloping_relation_matrix(q), m);
}

}  // namespace pmqkit
