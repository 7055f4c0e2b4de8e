#include "pmqkit/aq_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pmqkit/parallel.hpp"

namespace pmqkit {

namespace {

void check_parent(const FinitePMQ& q, const AQElement& x) {
  if (x.parent_digest != q.digest())
    throw std::invalid_argument("element belongs to a different PMQ");
}

GradedBasis basis_from_classes(const FinitePMQ& q,
                               std::vector<std::vector<int>> classes) {
  if (!q.has_norm()) throw std::invalid_argument("graded basis requires a normed PMQ");
  GradedBasis basis;
  std::vector<int> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto degree_of = [&](int i) { return 2 * q.norm(classes[i][0]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (degree_of(a) != degree_of(b)) return degree_of(a) < degree_of(b);
    return classes[a][0] < classes[b][0];
  });
  for (int i : order) {
    basis.degrees.push_back(degree_of(i));
    basis.classes.push_back(std::move(classes[i]));
  }
  return basis;
}

StructureConstants structure_constants_for(const FinitePMQ& q, GradedBasis basis) {
  StructureConstants sc;
  sc.basis = std::move(basis);
  const int k = sc.basis.size();
  sc.terms.assign(k, std::vector<std::vector<std::pair<int, long>>>(k));

  std::vector<int> class_of(q.size(), -1);
  for (int i = 0; i < k; ++i)
    for (int x : sc.basis.classes[i]) class_of[x] = i;

  parallel_for(static_cast<std::size_t>(k) * k, [&](std::size_t flat) {
    const int i = static_cast<int>(flat / k);
    const int j = static_cast<int>(flat % k);
    std::vector<long> count(q.size(), 0);
    for (int a : sc.basis.classes[i])
      for (int b : sc.basis.classes[j])
        if (q.prod_defined(a, b)) ++count[q.prod(a, b)];
    for (int t = 0; t < k; ++t) {
      const std::vector<int>& target = sc.basis.classes[t];
      const long c = count[target[0]];
      for (int x : target)
        if (count[x] != c) {
          std::ostringstream os;
          os << "product <S" << i << "><S" << j
             << "> is not constant on class " << t
             << "; the acting group does not preserve the product";
          throw std::logic_error(os.str());
        }
      if (c != 0) {
        if (sc.basis.degrees[t] != sc.basis.degrees[i] + sc.basis.degrees[j])
          throw std::logic_error("structure constant violates degree additivity");
        sc.terms[i][j].push_back({t, c});
      }
    }
  });
  return sc;
}

}  // namespace

int GradedBasis::class_of(int element) const {
  for (int i = 0; i < size(); ++i)
    for (int x : classes[i])
      if (x == element) return i;
  return -1;
}

long StructureConstants::coefficient(int s, int s_prime, int t) const {
  for (const auto& [target, c] : terms[s][s_prime])
    if (target == t) return c;
  return 0;
}

AQElement aq_zero(const FinitePMQ& q) { return AQElement{q.digest(), {}}; }

AQElement aq_generator(const FinitePMQ& q, int element) {
  if (element < 0 || element >= q.size())
    throw std::invalid_argument("element out of range");
  AQElement out{q.digest(), {}};
  out.coeffs[element] = 1;
  return out;
}

AQElement aq_class_sum(const FinitePMQ& q, const std::vector<int>& elements) {
  AQElement out{q.digest(), {}};
  for (int x : elements) {
    if (x < 0 || x >= q.size()) throw std::invalid_argument("element out of range");
    out.coeffs[x] += 1;
  }
  return out;
}

AQElement aq_add(const FinitePMQ& q, const AQElement& x, const AQElement& y) {
  check_parent(q, x);
  check_parent(q, y);
  AQElement out = x;
  for (const auto& [e, c] : y.coeffs) {
    mpq_class& slot = out.coeffs[e];
    slot += c;
    if (slot == 0) out.coeffs.erase(e);
  }
  return out;
}

AQElement aq_scale(const FinitePMQ& q, const mpq_class& c, const AQElement& x) {
  check_parent(q, x);
  AQElement out{q.digest(), {}};
  if (c == 0) return out;
  for (const auto& [e, v] : x.coeffs) out.coeffs[e] = c * v;
  return out;
}

AQElement pmq_ring_product(const FinitePMQ& q, const AQElement& x, const AQElement& y) {
  check_parent(q, x);
  check_parent(q, y);
  AQElement out{q.digest(), {}};
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs) {
      if (!q.prod_defined(a, b)) continue;
      mpq_class& slot = out.coeffs[q.prod(a, b)];
      slot += ca * cb;
      if (slot == 0) out.coeffs.erase(q.prod(a, b));
    }
  return out;
}

GradedBasis aq_basis(const FinitePMQ& q) {
  return basis_from_classes(q, conjugacy_classes(q));
}

GradedBasis aq_basis(const PMQGroupPair& pair) {
  return basis_from_classes(pair.pmq(), conjugacy_classes(pair));
}

StructureConstants aq_structure_constants(const FinitePMQ& q) {
  return structure_constants_for(q, aq_basis(q));
}

StructureConstants aq_structure_constants(const PMQGroupPair& pair) {
  return structure_constants_for(pair.pmq(), aq_basis(pair));
}

namespace {

std::vector<long> hilbert_from_basis(const GradedBasis& basis, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  std::vector<long> coeffs(max_degree + 1, 0);
  for (int d : basis.degrees)
    if (d <= max_degree) ++coeffs[d];
  return coeffs;
}

std::optional<std::pair<int, int>> commutativity_witness(const StructureConstants& sc) {
  for (int i = 0; i < sc.basis.size(); ++i)
    for (int j = 0; j < sc.basis.size(); ++j)
      if (sc.terms[i][j] != sc.terms[j][i]) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace

std::vector<long> hilbert_series(const FinitePMQ& q, int max_degree) {
  return hilbert_from_basis(aq_basis(q), max_degree);
}

std::vector<long> hilbert_series(const PMQGroupPair& pair, int max_degree) {
  return hilbert_from_basis(aq_basis(pair), max_degree);
}

std::optional<std::pair<int, int>> verify_commutativity(const FinitePMQ& q) {
  return commutativity_witness(aq_structure_constants(q));
}

std::optional<std::pair<int, int>> verify_commutativity(const PMQGroupPair& pair) {
  return commutativity_witness(aq_structure_constants(pair));
}

}  // namespace pmqkit
