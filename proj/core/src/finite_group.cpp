#include "pmqkit/finite_group.hpp"

#include <algorithm>
#include <set>

namespace pmqkit {

namespace {

void add_violation(ValidationReport& report, const std::string& axiom,
                   std::array<int, 3> witness, const std::string& detail) {
  for (const Violation& v : report.violations) {
    if (v.axiom == axiom) return;  // keep the first (lex-minimal) witness
  }
  report.violations.push_back({axiom, witness, detail});
}

}  // namespace

ValidationReport validate_mult_table(const std::vector<std::vector<int>>& mult) {
  ValidationReport report;
  const int n = static_cast<int>(mult.size());
  if (n == 0) {
    add_violation(report, "group.shape", {-1, -1, -1}, "empty table");
    return report;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(mult[g].size()) != n) {
      add_violation(report, "group.shape", {g, -1, -1}, "row length != size");
      return report;
    }
    for (int h = 0; h < n; ++h) {
      if (mult[g][h] < 0 || mult[g][h] >= n) {
        add_violation(report, "group.range", {g, h, -1}, "entry out of range");
        return report;
      }
    }
  }
  // two-sided identity
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int g = 0; g < n; ++g) {
      if (mult[e][g] != g || mult[g][e] != g) {
        is_id = false;
        break;
      }
    }
    if (is_id) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    add_violation(report, "group.identity", {-1, -1, -1}, "no two-sided identity");
  }
  for (int g = 0; g < n && identity >= 0; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < n; ++h) {
      if (mult[g][h] == identity && mult[h][g] == identity) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      add_violation(report, "group.inverse", {g, -1, -1}, "no two-sided inverse");
      break;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          add_violation(report, "group.assoc", {a, b, c}, "(ab)c != a(bc)");
          return report;
        }
  return report;
}

FiniteGroup FiniteGroup::from_mult_table(std::vector<std::vector<int>> mult) {
  ValidationReport report = validate_mult_table(mult);
  if (!report.ok()) throw ValidationError(std::move(report));
  FiniteGroup g;
  const int n = static_cast<int>(mult.size());
  g.mult_ = std::move(mult);
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int x = 0; x < n; ++x)
      if (g.mult_[e][x] != x || g.mult_[x][e] != x) {
        is_id = false;
        break;
      }
    if (is_id) {
      g.identity_ = e;
      break;
    }
  }
  g.inverse_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mult_[x][y] == g.identity_) {
        g.inverse_[x] = y;
        break;
      }
  return g;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> elems{identity_};
  std::vector<int> frontier{identity_};
  for (int g : gens)
    if (elems.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        int y = mult_[x][g];
        if (elems.insert(y).second) next.push_back(y);
      }
      int inv = inverse_[x];
      if (elems.insert(inv).second) next.push_back(inv);
    }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

bool FiniteGroup::generates(const std::vector<int>& gens) const {
  return static_cast<int>(subgroup_closure(gens).size()) == size();
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  const int n = size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit{a};
    cls[a] = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int b = 0; b < n; ++b) {
        int c = conj(orbit[i], b);
        if (cls[c] < 0) {
          cls[c] = cls[a];
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;  // already ordered by minimal member (scan order)
}

bool FiniteGroup::conjugation_closed(const std::vector<int>& subset) const {
  std::vector<bool> in(size(), false);
  for (int x : subset) in[x] = true;
  for (int x : subset)
    for (int b = 0; b < size(); ++b)
      if (!in[conj(x, b)]) return false;
  return true;
}

}  // namespace pmqkit
