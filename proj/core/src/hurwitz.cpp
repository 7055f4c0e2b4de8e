#include "pmqkit/hurwitz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pmqkit {

namespace {

template <typename Conj, typename ConjPreimage>
Tuple apply_move(const Tuple& t, int i, bool inverse, Conj conj,
                 ConjPreimage preimage) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size()))
    throw std::out_of_range("move position out of range");
  Tuple out = t;
  const int a = t[i], b = t[i + 1];
  if (!inverse) {
    out[i] = b;
    out[i + 1] = conj(a, b);
  } else {
    out[i] = preimage(b, a);
    out[i + 1] = a;
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && total > budget / base) throw BudgetExceededError(budget + 1, budget);
    total *= base;
  }
  if (total > budget) throw BudgetExceededError(total, budget);
  return total;
}

}  // namespace

Tuple hurwitz_move(const FiniteGroup& group, const Tuple& t, int i, bool inverse) {
  for (int x : t)
    if (x < 0 || x >= group.size()) throw std::invalid_argument("entry out of range");
  return apply_move(
      t, i, inverse, [&](int a, int b) { return group.conj(a, b); },
      [&](int y, int a) {
        // unique c with c^a = b: conjugate back
        return group.conj(y, group.inverse(a));
      });
}

Tuple hurwitz_move(const FinitePMQ& q, const Tuple& t, int i, bool inverse) {
  for (int x : t)
    if (x < 0 || x >= q.size()) throw std::invalid_argument("entry out of range");
  return apply_move(
      t, i, inverse, [&](int a, int b) { return q.conj(a, b); },
      [&](int y, int a) { return q.conj_preimage(y, a); });
}

TupleInvariants tuple_invariants(const FiniteGroup& group, const Tuple& t) {
  TupleInvariants inv;
  inv.total_product = group.identity();
  for (int x : t) inv.total_product = group.mult(inv.total_product, x);
  const auto classes = group.conjugacy_classes();
  std::vector<int> class_of(group.size(), -1);
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    for (int x : classes[i]) class_of[x] = i;
  for (int x : t) inv.classes.push_back(class_of[x]);
  std::sort(inv.classes.begin(), inv.classes.end());
  inv.subgroup_order = group.subgroup_closure(t).size();
  return inv;
}

template <typename ConjTable>
static std::vector<std::vector<int>> orbit_partition(const std::vector<int>& alphabet,
                                                     int n, const ConjTable& conj,
                                                     std::uint64_t budget,
                                                     std::vector<Tuple>& universe) {
  const std::uint64_t m = alphabet.size();
  checked_power(m, n, budget);
  std::vector<int> position(1 + *std::max_element(alphabet.begin(), alphabet.end()), -1);
  for (int i = 0; i < static_cast<int>(alphabet.size()); ++i) position[alphabet[i]] = i;

  // tuples in lex order over the alphabet; index = mixed-radix value
  universe.clear();
  Tuple current(n, 0);
  std::uint64_t total = n == 0 ? 1 : checked_power(m, n, budget);
  universe.reserve(total);
  for (std::uint64_t id = 0; id < total; ++id) {
    std::uint64_t rest = id;
    for (int pos = n - 1; pos >= 0; --pos) {
      current[pos] = alphabet[rest % m];
      rest /= m;
    }
    universe.push_back(current);
  }
  auto tuple_id = [&](const Tuple& t) {
    std::uint64_t id = 0;
    for (int x : t) id = id * m + position[x];
    return id;
  };

  UnionFind uf(universe.size());
  for (std::uint64_t id = 0; id < total; ++id) {
    const Tuple& t = universe[id];
    for (int i = 0; i + 1 < n; ++i) {
      Tuple moved = t;
      moved[i] = t[i + 1];
      moved[i + 1] = conj(t[i], t[i + 1]);
      uf.unite(static_cast<int>(id), static_cast<int>(tuple_id(moved)));
    }
  }
  std::vector<std::vector<int>> members_by_root(universe.size());
  for (std::uint64_t id = 0; id < total; ++id)
    members_by_root[uf.find(static_cast<int>(id))].push_back(static_cast<int>(id));
  std::vector<std::vector<int>> orbits;
  for (auto& members : members_by_root)
    if (!members.empty()) orbits.push_back(std::move(members));
  return orbits;  // roots are minimal ids, so orbits are rep-sorted
}

std::vector<HurwitzOrbit> enumerate_orbits(const FiniteGroup& group,
                                           const std::vector<int>& c, int n,
                                           const OrbitOptions& options) {
  if (n < 0) throw std::invalid_argument("tuple length must be non-negative");
  std::vector<int> alphabet = c;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  for (int x : alphabet)
    if (x < 0 || x >= group.size()) throw std::invalid_argument("entry out of range");
  if (!group.conjugation_closed(alphabet))
    throw std::invalid_argument("c is not closed under conjugation");

  if (n == 0) {
    HurwitzOrbit empty;
    empty.size = 1;
    empty.total_product = group.identity();
    empty.subgroup_order = 1;
    if (options.fix_total_product && *options.fix_total_product != group.identity())
      return {};
    return {empty};
  }
  if (alphabet.empty()) return {};

  std::vector<Tuple> universe;
  auto orbits = orbit_partition(
      alphabet, n, [&](int a, int b) { return group.conj(a, b); }, options.budget,
      universe);

  std::vector<HurwitzOrbit> out;
  for (const auto& members : orbits) {
    const Tuple& rep = universe[members.front()];
    TupleInvariants inv = tuple_invariants(group, rep);
    if (options.fix_total_product && inv.total_product != *options.fix_total_product)
      continue;
    HurwitzOrbit orbit;
    orbit.rep = rep;
    orbit.size = members.size();
    orbit.total_product = inv.total_product;
    orbit.classes = inv.classes;
    orbit.subgroup_order = inv.subgroup_order;
    out.push_back(std::move(orbit));
  }
  return out;
}

PmqOrbitSummary enumerate_pmq_orbits(const FinitePMQ& q, int n, std::uint64_t budget) {
  if (n < 0) throw std::invalid_argument("tuple length must be non-negative");
  PmqOrbitSummary out;
  if (n == 0) {
    out.orbit_count = 1;
    out.reps = {Tuple{}};
    return out;
  }
  const std::vector<int> alphabet = q.q_plus();
  if (alphabet.empty()) return out;
  std::vector<Tuple> universe;
  auto orbits = orbit_partition(
      alphabet, n, [&](int a, int b) { return q.conj(a, b); }, budget, universe);
  out.orbit_count = orbits.size();
  for (const auto& members : orbits) out.reps.push_back(universe[members.front()]);
  return out;
}

}  // namespace pmqkit
