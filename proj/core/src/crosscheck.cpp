#include "pmqkit/crosscheck.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"
#include "pmqkit/aq_ring.hpp"
#include "pmqkit/completion.hpp"
#include "pmqkit/enveloping.hpp"
#include "pmqkit/hurwitz.hpp"
#include "pmqkit/json_io.hpp"
#include "pmqkit/parallel.hpp"
#include "pmqkit/sullivan.hpp"
#include "pmqkit/version.hpp"

namespace pmqkit {

namespace {

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), "pass", std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), "fail", std::move(detail)};
}
CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), "skip", std::move(detail)};
}

CheckResult check_pmq_axioms(const FinitePMQ& q) {
  ValidationReport report = validate_pmq(q.tables());
  if (!report.ok()) return fail("pmq-axioms", report.summary());
  std::ostringstream os;
  os << "all axioms hold on " << q.size() << " elements";
  return pass("pmq-axioms", os.str());
}

CheckResult check_pair_axioms(const FinitePMQ& q,
                              const std::optional<PMQGroupPair>& pair) {
  if (pair) {
    ValidationReport report =
        validate_pair(q, pair->group(), pair->e_map(), pair->r_action());
    if (!report.ok()) return fail("pair-axioms", report.summary());
    std::ostringstream os;
    os << "supplied pair with group of order " << pair->group().size();
    return pass("pair-axioms", os.str());
  }
  try {
    PMQGroupPair canonical = canonical_pair(q);
    std::ostringstream os;
    os << "canonical pair with inner automorphism group of order "
       << canonical.group().size();
    return pass("pair-axioms", os.str());
  } catch (const ValidationError& e) {
    return fail("pair-axioms", e.report().summary());
  }
}

CheckResult check_norm_invariance(const FinitePMQ& q) {
  if (!q.has_norm()) return skip("norm-invariance", "no norm present");
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.norm(q.conj(a, b)) != q.norm(a))
        return fail("norm-invariance", "norm changes under conjugation");
  return pass("norm-invariance", "norm is conjugation-invariant");
}

CheckResult check_completion_vs_orbits(const FinitePMQ& q, std::uint64_t budget) {
  const char* name = "completion-vs-braid-orbits";
  if (!q.has_norm() || !q.is_augmented())
    return skip(name, "requires an augmented normed PMQ");
  if (!q.has_trivial_product())
    return skip(name, "orbit counting matches completion only for trivial products");
  std::ostringstream os;
  int verified = 0;
  for (int nu = 1; nu <= 4; ++nu) {
    try {
      const std::size_t classes = completion_classes(q, nu, budget).size();
      const std::uint64_t orbits = enumerate_pmq_orbits(q, nu, budget).orbit_count;
      if (classes != orbits) {
        std::ostringstream bad;
        bad << "norm " << nu << ": " << classes << " completion classes vs " << orbits
            << " orbits";
        return fail(name, bad.str());
      }
      if (nu > 1) os << ", ";
      os << classes;
      ++verified;
    } catch (const BudgetExceededError&) {
      os << " (norms above " << nu - 1 << " skipped: budget)";
      break;
    }
  }
  if (verified == 0) return skip(name, "state budget too small for norm 1");
  return pass(name, "counts per norm: " + os.str());
}

CheckResult check_collapse(const FinitePMQ& q, std::uint64_t budget) {
  const char* name = "complete-collapse";
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (!q.prod_defined(a, b)) return skip(name, "product is not total");
  try {
    CollapseReport report = complete_pmq_collapse_check(q, 4, budget);
    if (!report.collapses_to_group) {
      std::ostringstream os;
      os << "expected " << q.size() << " classes at every cap, got";
      for (auto c : report.class_count_at_cap) os << " " << c;
      return fail(name, os.str());
    }
    std::ostringstream os;
    os << "class count equals " << q.size() << " at every length cap up to 4";
    return pass(name, os.str());
  } catch (const BudgetExceededError& e) {
    return skip(name, e.what());
  }
}

CheckResult check_commutativity(const FinitePMQ& q,
                                const std::optional<PMQGroupPair>& pair) {
  const char* name = "ring-commutativity";
  if (!q.has_norm()) return skip(name, "grading requires a norm");
  auto witness = pair ? verify_commutativity(*pair) : verify_commutativity(q);
  if (witness) {
    std::ostringstream os;
    os << "<S" << witness->first << "><S" << witness->second << "> != reverse product";
    return fail(name, os.str());
  }
  return pass(name, "all basis pairs commute");
}

CheckResult check_ring_unit_and_degrees(const FinitePMQ& q,
                                        const std::optional<PMQGroupPair>& pair) {
  const char* name = "ring-unit-and-degrees";
  if (!q.has_norm()) return skip(name, "grading requires a norm");
  try {
    StructureConstants sc =
        pair ? aq_structure_constants(*pair) : aq_structure_constants(q);
    for (int j = 0; j < sc.basis.size(); ++j) {
      const std::vector<std::pair<int, long>> expected{{j, 1}};
      if (sc.terms[0][j] != expected || sc.terms[j][0] != expected)
        return fail(name, "unit class is not a two-sided unit");
    }
    return pass(name, "unit law and degree additivity hold");
  } catch (const std::logic_error& e) {
    return fail(name, e.what());
  }
}

CheckResult check_model_cohomology(const FinitePMQ& q,
                                   const std::optional<PMQGroupPair>& pair) {
  const char* name = "model-cohomology";
  if (!q.has_trivial_product())
    return skip(name, "the model is only defined for trivial products");
  if (!q.has_norm()) return skip(name, "grading requires a norm");
  SullivanModel model = pair ? sullivan_model(*pair) : sullivan_model(q);
  const int k = model.generator_pairs();
  const std::vector<long> dims = model_cohomology(model, 8);
  const std::vector<long> series =
      pair ? hilbert_series(*pair, 8) : hilbert_series(q, 8);
  if (k <= 1) {
    if (dims != series) return fail(name, "model cohomology differs from the series");
    return pass(name, "model cohomology equals the invariant series through degree 8");
  }
  for (int d = 0; d <= 3; ++d)
    if (dims[d] != series[d])
      return fail(name, "model cohomology differs from the series below degree 4");
  // with several classes the model continues with square-free counts
  std::vector<long> squarefree(9, 0);
  long c = 1;
  for (int j = 0; 2 * j <= 8; ++j) {
    squarefree[2 * j] = (j <= k) ? c : 0;
    if (j < k) c = c * (k - j) / (j + 1);
    else c = 0;
  }
  if (dims != squarefree)
    return fail(name, "model cohomology differs from the square-free counts");
  return pass(name,
              "series agree through degree 3; model continues with square-free counts");
}

CheckResult check_loop_betti(const FinitePMQ& q,
                             const std::optional<PMQGroupPair>& pair) {
  const char* name = "double-loop-betti";
  if (!q.has_trivial_product())
    return skip(name, "the double loop is only computed for trivial products");
  SullivanModel model = pair ? sullivan_model(*pair) : sullivan_model(q);
  const int k = model.generator_pairs();
  const std::vector<long> betti =
      pair ? loop_twice_betti(*pair, k + 2) : loop_twice_betti(q, k + 2);
  if (betti != looped_exterior_cohomology(k, k + 2))
    return fail(name, "closed form disagrees with the shifted-model cohomology");
  if (std::accumulate(betti.begin(), betti.end(), 0L) != (1L << k))
    return fail(name, "total dimension is not 2^k");
  for (int i = 0; i <= k; ++i)
    if (betti[i] != betti[k - i]) return fail(name, "Betti numbers are not symmetric");
  std::ostringstream os;
  os << "exterior algebra on " << k << " degree-1 classes";
  return pass(name, os.str());
}

CheckResult check_abelianization(const FinitePMQ& q) {
  const char* name = "abelianization-rank";
  AbelianInvariants inv = enveloping_abelianization(q);
  const int k = static_cast<int>(conjugacy_classes(q).size()) - 1;
  if (inv.free_rank > k)
    return fail(name, "free rank exceeds the class count");
  if (q.has_trivial_product() && (inv.free_rank != k || !inv.torsion.empty()))
    return fail(name, "trivial products must abelianize freely on the classes");
  std::ostringstream os;
  os << "free rank " << inv.free_rank << " with " << inv.torsion.size()
     << " torsion coefficients, " << k << " non-unit classes";
  return pass(name, os.str());
}

CheckResult check_monodromy(const FinitePMQ& q,
                            const std::optional<PMQGroupPair>& pair,
                            std::uint64_t budget) {
  const char* name = "monodromy-monoid-map";
  if (!q.has_norm() || !q.is_augmented())
    return skip(name, "requires an augmented normed PMQ");
  PMQGroupPair p = pair ? *pair : canonical_pair(q);
  try {
    std::vector<CompletionClass> small;
    for (int nu = 0; nu <= 2; ++nu)
      for (auto& cls : completion_classes(q, nu, budget)) small.push_back(cls);
    for (const auto& x : small)
      for (const auto& y : small) {
        const int xy = total_monodromy(p, completion_multiply(q, x, y, budget));
        if (xy != p.group().mult(total_monodromy(p, x), total_monodromy(p, y)))
          return fail(name, "monodromy is not multiplicative");
      }
    return pass(name, "monodromy is multiplicative on classes of norm up to 2");
  } catch (const BudgetExceededError& e) {
    return skip(name, e.what());
  }
}

}  // namespace

std::vector<CheckResult> crosscheck(const FinitePMQ& q,
                                    const std::optional<PMQGroupPair>& pair,
                                    std::uint64_t budget) {
  using Runner = std::function<CheckResult()>;
  const std::vector<Runner> runners{
      [&] { return check_pmq_axioms(q); },
      [&] { return check_pair_axioms(q, pair); },
      [&] { return check_norm_invariance(q); },
      [&] { return check_completion_vs_orbits(q, budget); },
      [&] { return check_collapse(q, budget); },
      [&] { return check_commutativity(q, pair); },
      [&] { return check_ring_unit_and_degrees(q, pair); },
      [&] { return check_model_cohomology(q, pair); },
      [&] { return check_loop_betti(q, pair); },
      [&] { return check_abelianization(q); },
      [&] { return check_monodromy(q, pair, budget); },
  };
  std::vector<CheckResult> results(runners.size());
  parallel_for(runners.size(), [&](std::size_t i) { results[i] = runners[i](); });
  return results;
}

std::string crosscheck_report(const std::string& input_bytes, std::uint64_t budget,
                              const std::vector<CheckResult>& checks) {
  nlohmann::json results;
  results["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json entry;
    entry["name"] = c.name;
    entry["status"] = c.status;
    entry["detail"] = c.detail;
    results["checks"].push_back(std::move(entry));
  }
  nlohmann::json report;
  report["command"] = "crosscheck";
  report["digest"] = content_digest_hex(input_bytes);
  report["parameters"] = {{"budget", budget}};
  report["results"] = std::move(results);
  report["version"] = kVersion;
  return report.dump(2) + "\n";
}

bool all_checks_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (c.status == "fail") return false;
  return true;
}

}  // namespace pmqkit
