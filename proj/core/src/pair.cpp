#include "pmqkit/pair.hpp"

#include <algorithm>
#include <sstream>

namespace pmqkit {

namespace {

void add_violation(ValidationReport& report, const std::string& axiom,
                   std::array<int, 3> witness, const std::string& detail) {
  for (const Violation& v : report.violations) {
    if (v.axiom == axiom) return;
  }
  report.violations.push_back({axiom, witness, detail});
}

}  // namespace

ValidationReport validate_pair(const FinitePMQ& pmq, const FiniteGroup& group,
                               const std::vector<int>& e_map,
                               const std::vector<std::vector<int>>& r_action) {
  ValidationReport report;
  const int n = pmq.size();
  const int gn = group.size();
  if (static_cast<int>(e_map.size()) != n) {
    add_violation(report, "pair.shape", {-1, -1, -1}, "e_map length != pmq size");
    return report;
  }
  for (int a = 0; a < n; ++a)
    if (e_map[a] < 0 || e_map[a] >= gn) {
      add_violation(report, "pair.range", {a, -1, -1}, "e_map entry out of range");
      return report;
    }
  if (static_cast<int>(r_action.size()) != gn) {
    add_violation(report, "pair.shape", {-1, -1, -1}, "r_action needs one row per group element");
    return report;
  }
  for (int g = 0; g < gn; ++g) {
    if (static_cast<int>(r_action[g].size()) != n) {
      add_violation(report, "pair.shape", {g, -1, -1}, "r_action row length != pmq size");
      return report;
    }
    std::vector<bool> hit(n, false);
    for (int a = 0; a < n; ++a) {
      int y = r_action[g][a];
      if (y < 0 || y >= n || hit[y]) {
        add_violation(report, "pair.r-permutation", {g, a, -1},
                      "r_action row is not a permutation");
        return report;
      }
      hit[y] = true;
    }
  }
  auto act = [&](int a, int g) { return r_action[g][a]; };

  // e is a map of PMQs into the group (with its conjugation quandle)
  if (e_map[pmq.unit()] != group.identity())
    add_violation(report, "pair.e-unit", {pmq.unit(), -1, -1}, "e(1) != identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (e_map[pmq.conj(a, b)] != group.conj(e_map[a], e_map[b]))
        add_violation(report, "pair.e-conj", {a, b, -1}, "e(a^b) != e(b)^-1 e(a) e(b)");
      if (pmq.prod_defined(a, b) &&
          e_map[pmq.prod(a, b)] != group.mult(e_map[a], e_map[b]))
        add_violation(report, "pair.e-prod", {a, b, -1}, "e(ab) != e(a)e(b)");
    }
  // r is a right action
  for (int a = 0; a < n; ++a)
    if (act(a, group.identity()) != a)
      add_violation(report, "pair.r-action", {group.identity(), a, -1},
                    "identity does not act trivially");
  for (int g = 0; g < gn; ++g)
    for (int h = 0; h < gn; ++h)
      for (int a = 0; a < n; ++a)
        if (act(a, group.mult(g, h)) != act(act(a, g), h))
          add_violation(report, "pair.r-action", {g, h, a}, "a^(gh) != (a^g)^h");
  // each r(g) is a PMQ automorphism
  for (int g = 0; g < gn; ++g) {
    if (act(pmq.unit(), g) != pmq.unit())
      add_violation(report, "pair.r-automorphism", {g, pmq.unit(), -1},
                    "action moves the unit");
    for (int a = 0; a < n; ++a) {
      if (pmq.has_norm() && pmq.norm(act(a, g)) != pmq.norm(a))
        add_violation(report, "pair.r-automorphism", {g, a, -1},
                      "action does not preserve the norm");
      for (int b = 0; b < n; ++b) {
        if (act(pmq.conj(a, b), g) != pmq.conj(act(a, g), act(b, g)))
          add_violation(report, "pair.r-automorphism", {g, a, b},
                        "action does not preserve conjugation");
        const bool def = pmq.prod_defined(a, b);
        const bool def_g = pmq.prod_defined(act(a, g), act(b, g));
        if (def != def_g ||
            (def && act(pmq.prod(a, b), g) != pmq.prod(act(a, g), act(b, g))))
          add_violation(report, "pair.r-automorphism", {g, a, b},
                        "action does not preserve the product");
      }
    }
  }
  // the action extends internal conjugation
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (act(a, e_map[b]) != pmq.conj(a, b))
        add_violation(report, "pair.r-extends-conj", {a, b, -1}, "a^e(b) != a^b");
  // equivariance of e
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < gn; ++g)
      if (e_map[act(a, g)] != group.conj(e_map[a], g))
        add_violation(report, "pair.e-equivariant", {a, g, -1},
                      "e(a^g) != g^-1 e(a) g");
  // e(Q) generates the group
  std::vector<int> closure = group.subgroup_closure(e_map);
  if (static_cast<int>(closure.size()) != gn) {
    std::ostringstream os;
    os << "e(Q) generates a proper subgroup of order " << closure.size() << ": {";
    for (std::size_t i = 0; i < closure.size(); ++i)
      os << (i ? "," : "") << closure[i];
    os << "}";
    add_violation(report, "pair.generates", {-1, -1, -1}, os.str());
  }
  return report;
}

PMQGroupPair PMQGroupPair::from_parts(FinitePMQ pmq, FiniteGroup group,
                                      std::vector<int> e_map,
                                      std::vector<std::vector<int>> r_action) {
  ValidationReport report = validate_pair(pmq, group, e_map, r_action);
  if (!report.ok()) throw ValidationError(std::move(report));
  return PMQGroupPair(std::move(pmq), std::move(group), std::move(e_map),
                      std::move(r_action));
}

std::vector<std::vector<int>> conjugacy_classes(const PMQGroupPair& pair) {
  const int n = pair.pmq().size();
  const int gn = pair.group().size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit{a};
    cls[a] = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int g = 0; g < gn; ++g) {
        int c = pair.act(orbit[i], g);
        if (cls[c] < 0) {
          cls[c] = cls[a];
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

PMQGroupPair pair_from_group_subset(const FiniteGroup& group, const std::vector<int>& c,
                                    PmqMode mode,
                                    const std::optional<std::vector<int>>& norm) {
  FinitePMQ pmq = from_group_subset(group, c, mode, norm);
  const int n = pmq.size();
  const int gn = group.size();
  std::vector<int> e_map(n, 0);
  std::vector<std::vector<int>> r_action(gn, std::vector<int>(n, 0));
  if (mode == PmqMode::kTrivial) {
    std::vector<int> subset = c;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::vector<int> to_pmq(gn, -1);
    for (int i = 0; i < static_cast<int>(subset.size()); ++i) to_pmq[subset[i]] = i + 1;
    e_map[0] = group.identity();
    for (int i = 1; i < n; ++i) e_map[i] = subset[i - 1];
    for (int g = 0; g < gn; ++g) {
      r_action[g][0] = 0;
      for (int i = 1; i < n; ++i) r_action[g][i] = to_pmq[group.conj(subset[i - 1], g)];
    }
  } else {
    for (int a = 0; a < n; ++a) e_map[a] = a;
    for (int g = 0; g < gn; ++g)
      for (int a = 0; a < n; ++a) r_action[g][a] = group.conj(a, g);
  }
  return PMQGroupPair::from_parts(std::move(pmq), group, std::move(e_map),
                                  std::move(r_action));
}

}  // namespace pmqkit
