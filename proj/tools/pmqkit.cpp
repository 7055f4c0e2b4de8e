// pmqkit command line: validation, conjugacy classes, completion monoids,
// enveloping-group invariants, braid orbits, the graded invariant ring, and
// stable Betti numbers, all reading the JSON document formats of the core
// library. Exit codes: 0 success, 2 validation failure, 3 budget exceeded,
// 4 malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmqkit/aq_ring.hpp"
#include "pmqkit/builtins.hpp"
#include "pmqkit/completion.hpp"
#include "pmqkit/crosscheck.hpp"
#include "pmqkit/enveloping.hpp"
#include "pmqkit/hurwitz.hpp"
#include "pmqkit/json_io.hpp"
#include "pmqkit/sullivan.hpp"
#include "pmqkit/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMalformed = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad index: " + item);
    out.push_back(value);
  }
  return out;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

nlohmann::json violations_json(const pmqkit::ValidationReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : report.violations) {
    nlohmann::json entry;
    entry["axiom"] = v.axiom;
    nlohmann::json witness = nlohmann::json::array();
    for (int w : v.witness)
      if (w >= 0) witness.push_back(w);
    entry["witness"] = std::move(witness);
    entry["detail"] = v.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

struct Options {
  std::string input_path;
  std::string group_path;
  std::string class_list;
  int norm = 0;
  int length = 0;
  int max_degree = -1;
  std::optional<int> total;
  bool with_members = false;
  std::uint64_t budget = pmqkit::kDefaultStateBudget;
};

int run_validate(const Options& opt) {
  const std::string bytes = read_file(opt.input_path);
  try {
    pmqkit::ParsedDocument doc = pmqkit::parse_pmq_document(bytes);
    nlohmann::json out;
    out["valid"] = true;
    out["size"] = doc.pmq.size();
    out["augmented"] = doc.pmq.is_augmented();
    out["normed"] = doc.pmq.has_norm();
    out["trivial_product"] = doc.pmq.has_trivial_product();
    out["has_pair"] = doc.pair.has_value();
    emit(out);
    return kExitOk;
  } catch (const pmqkit::ValidationError& e) {
    nlohmann::json out;
    out["valid"] = false;
    out["violations"] = violations_json(e.report());
    emit(out);
    return kExitValidation;
  }
}

int run_classes(const Options& opt) {
  pmqkit::ParsedDocument doc = pmqkit::parse_pmq_document(read_file(opt.input_path));
  nlohmann::json out;
  out["classes"] =
      doc.pair ? pmqkit::conjugacy_classes(*doc.pair) : pmqkit::conjugacy_classes(doc.pmq);
  emit(out);
  return kExitOk;
}

int run_completion(const Options& opt) {
  pmqkit::ParsedDocument doc = pmqkit::parse_pmq_document(read_file(opt.input_path));
  auto classes =
      pmqkit::completion_classes(doc.pmq, opt.norm, opt.budget, opt.with_members);
  nlohmann::json out;
  out["classes"] = nlohmann::json::array();
  for (const auto& cls : classes) {
    nlohmann::json entry;
    entry["norm"] = cls.norm;
    entry["rep"] = cls.rep;
    entry["size"] = cls.size;
    if (opt.with_members) entry["members"] = *cls.members;
    out["classes"].push_back(std::move(entry));
  }
  emit(out);
  return kExitOk;
}

int run_enveloping(const Options& opt) {
  pmqkit::ParsedDocument doc = pmqkit::parse_pmq_document(read_file(opt.input_path));
  pmqkit::InnerAutomorphismGroup inner =
      pmqkit::inner_automorphism_group(doc.pmq, opt.budget);
  pmqkit::AbelianInvariants inv = pmqkit::enveloping_abelianization(doc.pmq);
  nlohmann::json out;
  out["order"] = inner.order();
  out["abelianization"] = {{"rank", inv.free_rank}, {"torsion", inv.torsion}};
  emit(out);
  return kExitOk;
}

int run_hurwitz(const Options& opt) {
  pmqkit::FiniteGroup group = pmqkit::parse_group_document(read_file(opt.group_path));
  pmqkit::OrbitOptions orbit_options;
  orbit_options.budget = opt.budget;
  orbit_options.fix_total_product = opt.total;
  auto orbits = pmqkit::enumerate_orbits(group, parse_index_list(opt.class_list),
                                         opt.length, orbit_options);
  nlohmann::json out;
  out["orbits"] = nlohmann::json::array();
  for (const auto& orbit : orbits) {
    nlohmann::json entry;
    entry["rep"] = orbit.rep;
    entry["size"] = orbit.size;
    entry["total"] = orbit.total_product;
    entry["classes"] = orbit.classes;
    entry["subgroup_order"] = orbit.subgroup_order;
    out["orbits"].push_back(std::move(entry));
  }
  emit(out);
  return kExitOk;
}

int run_aq(const Options& opt) {
  pmqkit::ParsedDocument doc = pmqkit::parse_pmq_document(read_file(opt.input_path));
  pmqkit::StructureConstants sc = doc.pair ? pmqkit::aq_structure_constants(*doc.pair)
                                           : pmqkit::aq_structure_constants(doc.pmq);
  int max_degree = opt.max_degree;
  if (max_degree < 0) max_degree = 4 * doc.pmq.max_norm();
  const std::vector<long> series = doc.pair
                                       ? pmqkit::hilbert_series(*doc.pair, max_degree)
                                       : pmqkit::hilbert_series(doc.pmq, max_degree);
  nlohmann::json out;
  out["basis"] = nlohmann::json::array();
  for (int i = 0; i < sc.basis.size(); ++i) {
    nlohmann::json entry;
    entry["class"] = sc.basis.classes[i];
    entry["degree"] = sc.basis.degrees[i];
    out["basis"].push_back(std::move(entry));
  }
  out["structure"] = nlohmann::json::array();
  for (int i = 0; i < sc.basis.size(); ++i)
    for (int j = 0; j < sc.basis.size(); ++j) {
      if (sc.terms[i][j].empty()) continue;
      nlohmann::json entry;
      entry["S"] = i;
      entry["S'"] = j;
      entry["terms"] = nlohmann::json::array();
      for (const auto& [t, c] : sc.terms[i][j])
        entry["terms"].push_back({{"T", t}, {"coeff", c}});
      out["structure"].push_back(std::move(entry));
    }
  out["hilbert"] = series;
  emit(out);
  return kExitOk;
}

int run_betti(const Options& opt) {
  pmqkit::FiniteGroup group = pmqkit::parse_group_document(read_file(opt.group_path));
  const int max_degree = opt.max_degree < 0 ? 8 : opt.max_degree;
  pmqkit::StableBettiReport report =
      pmqkit::stable_hurwitz_betti(group, parse_index_list(opt.class_list), max_degree);
  nlohmann::json out;
  out["k"] = report.class_count;
  out["classes"] = report.classes;
  out["betti"] = report.betti;
  emit(out);
  return kExitOk;
}

int run_crosscheck(const Options& opt) {
  const std::string bytes = read_file(opt.input_path);
  pmqkit::ParsedDocument doc = pmqkit::parse_pmq_document(bytes);
  const auto start = std::chrono::steady_clock::now();
  auto checks = pmqkit::crosscheck(doc.pmq, doc.pair, opt.budget);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cout << pmqkit::crosscheck_report(bytes, opt.budget, checks);
  std::cerr << "elapsed_ms " << elapsed.count() << "\n";
  return pmqkit::all_checks_pass(checks) ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pmqkit: computational invariants of finite partially multiplicative quandles"};
  app.set_version_flag("--version", pmqkit::kVersion);
  app.require_subcommand(1);

  Options opt;
  app.add_option("--budget", opt.budget, "global state budget for enumerations");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input_path, "PMQ document")->required();
  };
  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", opt.group_path, "group document")->required();
    cmd->add_option("--class", opt.class_list,
                    "comma-separated element indices of a conjugation-closed subset")
        ->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check all axioms of a document");
  add_input(validate);
  CLI::App* classes = app.add_subcommand("classes", "conjugacy classes of a document");
  add_input(classes);
  CLI::App* completion =
      app.add_subcommand("completion", "completion-monoid classes of a fixed norm");
  add_input(completion);
  completion->add_option("--norm", opt.norm, "total norm of the enumerated words")
      ->required();
  completion->add_flag("--members", opt.with_members, "include full member lists");
  CLI::App* enveloping =
      app.add_subcommand("enveloping", "inner automorphism group and abelianization");
  add_input(enveloping);
  CLI::App* hurwitz = app.add_subcommand("hurwitz", "braid orbits on tuples");
  add_group(hurwitz);
  hurwitz->add_option("--length", opt.length, "tuple length")->required();
  int total_value = 0;
  CLI::Option* total_opt =
      hurwitz->add_option("--total", total_value, "restrict to a total product");
  CLI::App* aq = app.add_subcommand("aq", "graded invariant ring of a normed PMQ");
  add_input(aq);
  aq->add_option("--max-deg", opt.max_degree, "largest reported degree");
  CLI::App* betti =
      app.add_subcommand("betti", "stable Betti numbers for monodromies in a subset");
  add_group(betti);
  betti->add_option("--max-deg", opt.max_degree, "largest reported degree");
  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "run every applicable consistency check");
  add_input(crosscheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitMalformed : kExitOk;
  }

  if (*total_opt) opt.total = total_value;

  try {
    if (*validate) return run_validate(opt);
    if (*classes) return run_classes(opt);
    if (*completion) return run_completion(opt);
    if (*enveloping) return run_enveloping(opt);
    if (*hurwitz) return run_hurwitz(opt);
    if (*aq) return run_aq(opt);
    if (*betti) return run_betti(opt);
    if (*crosscheck) return run_crosscheck(opt);
  } catch (const pmqkit::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const pmqkit::ParseError& e) {
    std::cerr << "error: syntax error at byte " << e.byte() << ": " << e.what() << "\n";
    return kExitMalformed;
  } catch (const pmqkit::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const pmqkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitOk;
}
