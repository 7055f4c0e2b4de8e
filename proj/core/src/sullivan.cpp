#include "pmqkit/sullivan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pmqkit/validation.hpp"

namespace pmqkit {

namespace {

using Monomial = std::vector<int>;  // exponent per generator
using Poly = std::vector<std::pair<mpq_class, Monomial>>;

// free graded-commutative algebra with a derivation of degree +1
struct Cdga {
  std::vector<int> degrees;
  std::vector<Poly> diff;  // d(generator i)

  bool odd(int i) const { return degrees[i] % 2 != 0; }
  int monomial_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * degrees[i];
    return d;
  }
};

// Koszul sign of merging g^a * g^b written in generator order; zero when an
// odd generator would repeat (encoded as nullopt)
std::optional<std::pair<int, Monomial>> multiply(const Cdga& algebra, const Monomial& a,
                                                 const Monomial& b) {
  const std::size_t n = a.size();
  Monomial out(n);
  long crossings = 0;
  long odd_tail = 0;  // odd factors of `a` strictly to the right of position j
  for (std::size_t j = n; j-- > 0;) {
    if (algebra.odd(j)) {
      if (a[j] + b[j] > 1) return std::nullopt;
      if (b[j]) crossings += odd_tail;
      odd_tail += a[j];
    }
    out[j] = a[j] + b[j];
  }
  return std::make_pair(crossings % 2 == 0 ? 1 : -1, out);
}

Poly normalise(std::vector<std::pair<mpq_class, Monomial>> terms) {
  std::map<Monomial, mpq_class> acc;
  for (auto& [c, m] : terms) acc[m] += c;
  Poly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({c, m});
  return out;
}

Poly differential_of_poly(const Cdga& algebra, const Poly& p);

Poly differential(const Cdga& algebra, const Monomial& m) {
  std::vector<std::pair<mpq_class, Monomial>> terms;
  const std::size_t n = m.size();
  long sign_exp = 0;  // parity of the degree of the prefix passed so far
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] > 0 && !algebra.diff[i].empty()) {
      // remove one factor of generator i, multiply in d(gen i)
      Monomial rest = m;
      rest[i] -= 1;
      const mpq_class chain = m[i];  // exponent rule; equals 1 for odd gens
      for (const auto& [c, payload] : algebra.diff[i]) {
        // prefix sign from moving d past the first i factors, then merge
        auto merged = multiply(algebra, payload, rest);
        if (!merged) continue;
        const int s = (sign_exp % 2 == 0 ? 1 : -1) * merged->first;
        terms.push_back({chain * c * s, merged->second});
      }
    }
    sign_exp += static_cast<long>(m[i]) * algebra.degrees[i];
  }
  return normalise(std::move(terms));
}

Poly differential_of_poly(const Cdga& algebra, const Poly& p) {
  std::vector<std::pair<mpq_class, Monomial>> terms;
  for (const auto& [c, m] : p)
    for (const auto& [c2, m2] : differential(algebra, m)) terms.push_back({c * c2, m2});
  return normalise(std::move(terms));
}

// all monomials of degree <= max_degree, bucketed by degree
std::vector<std::vector<Monomial>> bases_by_degree(const Cdga& algebra, int max_degree,
                                                   std::size_t budget) {
  std::vector<std::vector<Monomial>> bases(max_degree + 1);
  std::size_t total = 0;
  Monomial mono(algebra.degrees.size(), 0);
  auto gen_all = [&](auto&& self, std::size_t gen, int used) -> void {
    if (gen == algebra.degrees.size()) {
      if (++total > budget) throw BudgetExceededError(total, budget);
      bases[used].push_back(mono);
      return;
    }
    const int deg = algebra.degrees[gen];
    const int room = max_degree - used;
    const int cap = algebra.odd(gen) ? std::min(1, deg > 0 ? room / deg : 0)
                                     : (deg > 0 ? room / deg : 0);
    for (int e = 0; e <= cap; ++e) {
      mono[gen] = e;
      self(self, gen + 1, used + e * deg);
    }
    mono[gen] = 0;
  };
  gen_all(gen_all, 0, 0);
  return bases;
}

// rank of a sparse rational matrix by Gaussian elimination
long matrix_rank(std::vector<std::map<int, mpq_class>> rows) {
  long rank = 0;
  std::map<int, std::size_t> pivot_row_of_col;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    while (!row.empty()) {
      const int col = row.begin()->first;
      auto it = pivot_row_of_col.find(col);
      if (it == pivot_row_of_col.end()) break;
      const auto& pivot = rows[it->second];
      const mpq_class factor = row.begin()->second / pivot.begin()->second;
      for (const auto& [c, v] : pivot) {
        mpq_class& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
    }
    if (!row.empty()) {
      pivot_row_of_col[row.begin()->first] = r;
      ++rank;
    }
  }
  return rank;
}

std::vector<long> cohomology_dims(const Cdga& algebra, int max_degree,
                                  std::size_t budget) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  const auto bases = bases_by_degree(algebra, max_degree + 1, budget);
  std::vector<std::map<Monomial, int>> index(bases.size());
  for (std::size_t d = 0; d < bases.size(); ++d)
    for (int i = 0; i < static_cast<int>(bases[d].size()); ++i)
      index[d][bases[d][i]] = i;

  std::vector<long> ranks(bases.size(), 0);  // rank of d: deg -> deg+1
  for (int d = 0; d + 1 < static_cast<int>(bases.size()); ++d) {
    std::vector<std::map<int, mpq_class>> rows;
    rows.reserve(bases[d].size());
    for (const Monomial& m : bases[d]) {
      std::map<int, mpq_class> row;
      const Poly image = differential(algebra, m);
      // d^2 = 0 must hold on the whole truncated basis
      if (!differential_of_poly(algebra, image).empty())
        throw std::logic_error("differential does not square to zero");
      for (const auto& [c, target] : image) row[index[d + 1].at(target)] = c;
      rows.push_back(std::move(row));
    }
    ranks[d] = matrix_rank(std::move(rows));
  }
  std::vector<long> dims(max_degree + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    long dim = static_cast<long>(bases[d].size()) - ranks[d];
    if (d > 0) dim -= ranks[d - 1];
    dims[d] = dim;
  }
  return dims;
}

Cdga model_algebra(const SullivanModel& model) {
  const int k = model.generator_pairs();
  Cdga algebra;
  algebra.degrees.resize(2 * k);
  algebra.diff.resize(2 * k);
  for (int i = 0; i < k; ++i) {
    algebra.degrees[i] = 2;          // x_i
    algebra.degrees[k + i] = 3;      // y_i
    Monomial x_sq(2 * k, 0);
    x_sq[i] = 2;
    algebra.diff[k + i] = Poly{{mpq_class(1), x_sq}};
  }
  return algebra;
}

std::vector<std::vector<int>> non_unit_classes(const FinitePMQ& q,
                                               std::vector<std::vector<int>> classes) {
  std::vector<std::vector<int>> out;
  for (auto& cls : classes)
    if (!(cls.size() == 1 && cls[0] == q.unit())) out.push_back(std::move(cls));
  return out;
}

void require_trivial_product(const FinitePMQ& q) {
  if (!q.has_trivial_product())
    throw std::invalid_argument("the model is only defined for trivial products");
}

std::vector<long> binomial_row(int k, int max_degree) {
  std::vector<long> out(max_degree + 1, 0);
  mpz_class c = 1;
  for (int i = 0; i <= max_degree; ++i) {
    if (i <= k) {
      out[i] = static_cast<long>(c.get_si());
      c = c * (k - i) / (i + 1);
    }
  }
  return out;
}

}  // namespace

SullivanModel sullivan_model(const FinitePMQ& q) {
  require_trivial_product(q);
  return SullivanModel{non_unit_classes(q, conjugacy_classes(q))};
}

SullivanModel sullivan_model(const PMQGroupPair& pair) {
  require_trivial_product(pair.pmq());
  return SullivanModel{non_unit_classes(pair.pmq(), conjugacy_classes(pair))};
}

std::vector<long> model_cohomology(const SullivanModel& model, int max_degree,
                                   std::size_t monomial_budget) {
  return cohomology_dims(model_algebra(model), max_degree, monomial_budget);
}

bool model_d_squared_is_zero(const SullivanModel& model, int max_degree,
                             std::size_t monomial_budget) {
  const Cdga algebra = model_algebra(model);
  for (const auto& basis : bases_by_degree(algebra, max_degree, monomial_budget))
    for (const Monomial& m : basis)
      if (!differential_of_poly(algebra, differential(algebra, m)).empty())
        return false;
  return true;
}

std::vector<long> loop_twice_betti(const FinitePMQ& q, int max_degree) {
  require_trivial_product(q);
  const int k = static_cast<int>(non_unit_classes(q, conjugacy_classes(q)).size());
  return binomial_row(k, max_degree);
}

std::vector<long> loop_twice_betti(const PMQGroupPair& pair, int max_degree) {
  require_trivial_product(pair.pmq());
  const int k =
      static_cast<int>(non_unit_classes(pair.pmq(), conjugacy_classes(pair)).size());
  return binomial_row(k, max_degree);
}

std::vector<long> looped_exterior_cohomology(int k, int max_degree,
                                             std::size_t monomial_budget) {
  if (k < 0) throw std::invalid_argument("generator count must be non-negative");
  Cdga algebra;
  algebra.degrees.assign(k, 1);
  algebra.diff.assign(k, Poly{});
  return cohomology_dims(algebra, max_degree, monomial_budget);
}

StableBettiReport stable_hurwitz_betti(const FiniteGroup& group,
                                       const std::vector<int>& c, int max_degree) {
  std::vector<int> subset = c;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int x : subset)
    if (x < 0 || x >= group.size())
      throw std::invalid_argument("subset element out of range");
  for (int x : subset)
    if (x == group.identity())
      throw std::invalid_argument("the monodromy set may not contain the identity");
  if (!group.conjugation_closed(subset))
    throw std::invalid_argument("c is not closed under conjugation");
  if (!group.generates(subset))
    throw std::invalid_argument("c does not generate the group");

  PMQGroupPair pair = pair_from_group_subset(group, subset, PmqMode::kTrivial);
  StableBettiReport report;
  // classes of c under the full group action, reported as group elements
  std::vector<int> seen(group.size(), 0);
  for (int x : subset) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int g = 0; g < group.size(); ++g) {
      int y = group.conj(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end());
  report.class_count = static_cast<int>(report.classes.size());
  report.betti = loop_twice_betti(pair, max_degree);
  return report;
}

}  // namespace pmqkit
