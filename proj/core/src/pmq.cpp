#include "pmqkit/pmq.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmqkit {

namespace {

// Records at most one violation per axiom id; scan order makes the kept
// witness the first (smallest) one.
void add_violation(ValidationReport& report, const std::string& axiom,
                   std::array<int, 3> witness, const std::string& detail) {
  for (const Violation& v : report.violations) {
    if (v.axiom == axiom) return;
  }
  report.violations.push_back({axiom, witness, detail});
}

bool shape_ok(const PmqTables& t, ValidationReport& report) {
  const int n = t.size;
  if (n <= 0) {
    add_violation(report, "table.shape", {-1, -1, -1}, "size must be positive");
    return false;
  }
  if (t.unit < 0 || t.unit >= n) {
    add_violation(report, "table.range", {t.unit, -1, -1}, "unit index out of range");
    return false;
  }
  if (static_cast<int>(t.conj.size()) != n || static_cast<int>(t.prod.size()) != n) {
    add_violation(report, "table.shape", {-1, -1, -1}, "conj/prod must have `size` rows");
    return false;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(t.conj[a].size()) != n ||
        static_cast<int>(t.prod[a].size()) != n) {
      add_violation(report, "table.shape", {a, -1, -1}, "row length != size");
      return false;
    }
    for (int b = 0; b < n; ++b) {
      if (t.conj[a][b] < 0 || t.conj[a][b] >= n) {
        add_violation(report, "table.range", {a, b, -1}, "conj entry out of range");
        return false;
      }
      if (t.prod[a][b] != kUndefined && (t.prod[a][b] < 0 || t.prod[a][b] >= n)) {
        add_violation(report, "table.range", {a, b, -1}, "prod entry out of range");
        return false;
      }
    }
  }
  if (t.norm && static_cast<int>(t.norm->size()) != n) {
    add_violation(report, "table.shape", {-1, -1, -1}, "norm length != size");
    return false;
  }
  return true;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  h ^= x;
  return h * 1099511628211ULL;
}

std::uint64_t tables_digest(const PmqTables& t) {
  std::uint64_t h = 14695981039346656037ULL;
  h = fnv1a(h, static_cast<std::uint64_t>(t.size));
  h = fnv1a(h, static_cast<std::uint64_t>(t.unit));
  for (const auto& row : t.conj)
    for (int x : row) h = fnv1a(h, static_cast<std::uint64_t>(x + 2));
  for (const auto& row : t.prod)
    for (int x : row) h = fnv1a(h, static_cast<std::uint64_t>(x + 2));
  h = fnv1a(h, t.norm ? 1 : 0);
  if (t.norm)
    for (int x : *t.norm) h = fnv1a(h, static_cast<std::uint64_t>(x + 2));
  return h;
}

}  // namespace

ValidationReport validate_pmq(const PmqTables& t) {
  ValidationReport report;
  if (!shape_ok(t, report)) return report;
  const int n = t.size;
  const int e = t.unit;
  auto conj = [&](int a, int b) { return t.conj[a][b]; };
  auto prod = [&](int a, int b) { return t.prod[a][b]; };
  auto defined = [&](int a, int b) { return t.prod[a][b] != kUndefined; };

  // conj-by-b is a bijection for every b
  for (int b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (int a = 0; a < n; ++a) {
      if (hit[conj(a, b)]) {
        add_violation(report, "conj.bijective", {a, b, -1},
                      "a -> a^b is not injective");
        break;
      }
      hit[conj(a, b)] = true;
    }
  }
  // unit behaviour of conjugation
  for (int a = 0; a < n; ++a) {
    if (conj(a, e) != a) add_violation(report, "conj.unit", {a, e, -1}, "a^1 != a");
    if (conj(e, a) != e) add_violation(report, "conj.unit", {e, a, -1}, "1^b != 1");
  }
  // self-distributivity (a^b)^c = (a^c)^(b^c)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (conj(conj(a, b), c) != conj(conj(a, c), conj(b, c)))
          add_violation(report, "conj.self-distributive", {a, b, c},
                        "(a^b)^c != (a^c)^(b^c)");
  // unit is a two-sided neutral element for the product
  for (int a = 0; a < n; ++a) {
    if (prod(e, a) != a) add_violation(report, "prod.unit", {e, a, -1}, "1*a != a");
    if (prod(a, e) != a) add_violation(report, "prod.unit", {a, e, -1}, "a*1 != a");
  }
  // partial associativity, including transfer of definedness both ways
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const bool left = defined(a, b) && defined(prod(a, b), c);
        const bool right = defined(b, c) && defined(a, prod(b, c));
        if (left != right)
          add_violation(report, "prod.associative", {a, b, c},
                        "definedness of (ab)c and a(bc) disagrees");
        else if (left && prod(prod(a, b), c) != prod(a, prod(b, c)))
          add_violation(report, "prod.associative", {a, b, c}, "(ab)c != a(bc)");
      }
  // compatibility of product and conjugation
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!defined(a, b)) continue;
      const int ab = prod(a, b);
      for (int c = 0; c < n; ++c) {
        if (conj(c, ab) != conj(conj(c, a), b))
          add_violation(report, "prod.conj-exponent", {a, b, c}, "c^(ab) != (c^a)^b");
        if (!defined(conj(a, c), conj(b, c)) ||
            prod(conj(a, c), conj(b, c)) != conj(ab, c))
          add_violation(report, "prod.conj-product", {a, b, c},
                        "(ab)^c != (a^c)(b^c)");
      }
      if (!defined(b, conj(a, b)) || prod(b, conj(a, b)) != ab)
        add_violation(report, "prod.swap", {a, b, -1}, "ab != b(a^b)");
    }
  if (t.norm) {
    const std::vector<int>& nm = *t.norm;
    if (nm[e] != 0) add_violation(report, "norm.unit", {e, -1, -1}, "norm(1) != 0");
    for (int a = 0; a < n; ++a) {
      if (a != e && nm[a] < 1)
        add_violation(report, "norm.positive", {a, -1, -1}, "norm(a) < 1 for a != 1");
      for (int b = 0; b < n; ++b) {
        if (nm[conj(a, b)] != nm[a])
          add_violation(report, "norm.conj-invariant", {a, b, -1},
                        "norm(a^b) != norm(a)");
        if (defined(a, b) && nm[prod(a, b)] != nm[a] + nm[b])
          add_violation(report, "norm.additive", {a, b, -1},
                        "norm(ab) != norm(a) + norm(b)");
      }
    }
  }
  return report;
}

FinitePMQ FinitePMQ::from_tables(PmqTables tables) {
  ValidationReport report = validate_pmq(tables);
  if (!report.ok()) throw ValidationError(std::move(report));
  FinitePMQ q;
  q.tables_ = std::move(tables);
  const int n = q.tables_.size;
  q.conj_inv_.assign(n, std::vector<int>(n, 0));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) q.conj_inv_[q.tables_.conj[a][b]][b] = a;
  q.digest_ = tables_digest(q.tables_);
  return q;
}

int FinitePMQ::max_norm() const {
  if (!has_norm()) return 0;
  int m = 0;
  for (int v : *tables_.norm) m = std::max(m, v);
  return m;
}

bool FinitePMQ::is_augmented() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (prod_defined(a, b) && prod(a, b) == unit() && (a != unit() || b != unit()))
        return false;
  return true;
}

bool FinitePMQ::has_trivial_product() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (a != unit() && b != unit() && prod_defined(a, b)) return false;
  return true;
}

std::vector<int> FinitePMQ::q_plus() const {
  std::vector<int> out;
  out.reserve(size() - 1);
  for (int a = 0; a < size(); ++a)
    if (a != unit()) out.push_back(a);
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FinitePMQ& q) {
  const int n = q.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit{a};
    cls[a] = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int b = 0; b < n; ++b) {
        int c = q.conj(orbit[i], b);
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

FinitePMQ from_group_subset(const FiniteGroup& group, const std::vector<int>& c,
                            PmqMode mode, const std::optional<std::vector<int>>& norm) {
  const int g_n = group.size();
  std::vector<int> subset = c;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int x : subset)
    if (x < 0 || x >= g_n) throw std::invalid_argument("subset element out of range");

  PmqTables t;
  switch (mode) {
    case PmqMode::kTrivial: {
      for (int x : subset)
        if (x == group.identity())
          throw std::invalid_argument("trivial mode requires the identity not in c");
      if (!group.conjugation_closed(subset))
        throw std::invalid_argument("c is not closed under conjugation");
      const int n = static_cast<int>(subset.size()) + 1;
      // index 0 is the fresh unit; index i >= 1 is subset[i-1]
      std::vector<int> to_pmq(g_n, -1);
      for (int i = 0; i < n - 1; ++i) to_pmq[subset[i]] = i + 1;
      t.size = n;
      t.unit = 0;
      t.conj.assign(n, std::vector<int>(n, 0));
      t.prod.assign(n, std::vector<int>(n, kUndefined));
      t.norm = std::vector<int>(n, 1);
      (*t.norm)[0] = 0;
      for (int a = 0; a < n; ++a) {
        t.conj[a][0] = a;
        t.conj[0][a] = 0;
        t.prod[a][0] = a;
        t.prod[0][a] = a;
      }
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
          t.conj[a][b] = to_pmq[group.conj(subset[a - 1], subset[b - 1])];
      break;
    }
    case PmqMode::kComplete: {
      t.size = g_n;
      t.unit = group.identity();
      t.conj.assign(g_n, std::vector<int>(g_n, 0));
      t.prod = group.mult_table();
      for (int a = 0; a < g_n; ++a)
        for (int b = 0; b < g_n; ++b) t.conj[a][b] = group.conj(a, b);
      break;
    }
    case PmqMode::kGeodesic: {
      if (!norm) throw std::invalid_argument("geodesic mode requires a norm vector");
      if (static_cast<int>(norm->size()) != g_n)
        throw std::invalid_argument("norm vector length != group size");
      t.size = g_n;
      t.unit = group.identity();
      t.norm = *norm;
      t.conj.assign(g_n, std::vector<int>(g_n, 0));
      t.prod.assign(g_n, std::vector<int>(g_n, kUndefined));
      for (int a = 0; a < g_n; ++a)
        for (int b = 0; b < g_n; ++b) {
          t.conj[a][b] = group.conj(a, b);
          const int ab = group.mult(a, b);
          if ((*norm)[a] + (*norm)[b] == (*norm)[ab]) t.prod[a][b] = ab;
        }
      break;
    }
  }
  return FinitePMQ::from_tables(std::move(t));
}

}  // namespace pmqkit
