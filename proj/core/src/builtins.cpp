#include "pmqkit/builtins.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pmqkit {

std::vector<int> SymmetricGroup::elements_of_length(int len) const {
  std::vector<int> out;
  for (int g = 0; g < group.size(); ++g)
    if (reflection_length[g] == len) out.push_back(g);
  return out;
}

std::vector<int> SymmetricGroup::non_identity() const {
  std::vector<int> out;
  for (int g = 0; g < group.size(); ++g)
    if (g != group.identity()) out.push_back(g);
  return out;
}

SymmetricGroup make_symmetric_group(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric group size out of range");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      std::vector<int> gh(n);
      for (int x = 0; x < n; ++x) gh[x] = perms[h][perms[g][x]];  // g first, then h
      mult[g][h] = index[gh];
    }

  SymmetricGroup sym;
  sym.group = FiniteGroup::from_mult_table(std::move(mult));
  sym.reflection_length.resize(order);
  for (int g = 0; g < order; ++g) {
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      ++cycles;
      for (int y = x; !seen[y]; y = perms[g][y]) seen[y] = true;
    }
    sym.reflection_length[g] = n - cycles;
  }
  sym.perms = std::move(perms);
  return sym;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return FiniteGroup::from_mult_table(std::move(mult));
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& group) {
  std::set<std::vector<int>> found;
  found.insert({group.identity()});
  // seed with cyclic subgroups, then extend until saturated
  for (int g = 0; g < group.size(); ++g) found.insert(group.subgroup_closure({g}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> next = found;
    for (const auto& h : found)
      for (int g = 0; g < group.size(); ++g) {
        std::vector<int> gens = h;
        gens.push_back(g);
        std::vector<int> closure = group.subgroup_closure(gens);
        if (next.insert(closure).second) grew = true;
      }
    found = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FiniteGroup subgroup_group(const FiniteGroup& group, const std::vector<int>& elements) {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = pos.find(group.mult(elems[a], elems[b]));
      if (it == pos.end())
        throw std::invalid_argument("element list is not closed under multiplication");
      mult[a][b] = it->second;
    }
  return FiniteGroup::from_mult_table(std::move(mult));
}

FinitePMQ trivial_pmq(const FiniteGroup& group, const std::vector<int>& c) {
  return from_group_subset(group, c, PmqMode::kTrivial);
}

FinitePMQ complete_pmq(const FiniteGroup& group) {
  return from_group_subset(group, {}, PmqMode::kComplete);
}

FinitePMQ geodesic_pmq(const SymmetricGroup& sym) {
  return from_group_subset(sym.group, {}, PmqMode::kGeodesic, sym.reflection_length);
}

}  // namespace pmqkit
