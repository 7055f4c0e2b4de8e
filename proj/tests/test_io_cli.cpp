#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pmqkit/builtins.hpp"
#include "pmqkit/crosscheck.hpp"
#include "pmqkit/json_io.hpp"
#include "pmqkit/version.hpp"

using namespace pmqkit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string data_file(const std::string& name) {
  return std::string(PMQKIT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("minimal one-element document parses") {
  const std::string doc =
      R"({"size":1,"unit":0,"conj":[[0]],"prod":[[0]],"norm":[0]})";
  ParsedDocument parsed = parse_pmq_document(doc);
  CHECK(parsed.pmq.size() == 1);
  CHECK_FALSE(parsed.pair.has_value());
}

TEST_CASE("truncated input reports the byte offset") {
  const std::string doc = R"({"size":1,"unit":0,"conj":[[0)";
  try {
    parse_pmq_document(doc);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.byte() > 0);
    CHECK(e.byte() <= doc.size() + 1);
  }
}

TEST_CASE("schema violations carry a path and unknown fields are rejected") {
  CHECK_THROWS_WITH_AS(
      parse_pmq_document(R"({"size":1,"unit":0,"conj":[[0]],"prod":[[0]],"extra":1})"),
      doctest::Contains("/extra"), SchemaError);
  CHECK_THROWS_WITH_AS(
      parse_pmq_document(R"({"size":1,"unit":0,"conj":[[0]],"prod":[["x"]]})"),
      doctest::Contains("/prod/0/0"), SchemaError);
  CHECK_THROWS_AS(parse_pmq_document(R"({"size":1,"unit":0,"conj":[[0]]})"),
                  SchemaError);
}

TEST_CASE("a single inconsistently removed product cell is a caught axiom violation") {
  SymmetricGroup s3 = make_symmetric_group(3);
  PmqTables t = geodesic_pmq(s3).tables();
  t.prod[2][5] = kUndefined;  // (12)(13) removed, every mirror relation kept

  nlohmann::json doc;
  doc["size"] = t.size;
  doc["unit"] = t.unit;
  doc["conj"] = t.conj;
  nlohmann::json prod = nlohmann::json::array();
  for (const auto& row : t.prod) {
    nlohmann::json r = nlohmann::json::array();
    for (int x : row)
      if (x == kUndefined)
        r.push_back(nullptr);
      else
        r.push_back(x);
    prod.push_back(std::move(r));
  }
  doc["prod"] = std::move(prod);
  doc["norm"] = *t.norm;

  try {
    parse_pmq_document(doc.dump());
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    REQUIRE_FALSE(e.report().ok());
    bool product_axiom = false;
    for (const Violation& v : e.report().violations) {
      if (v.axiom.rfind("prod.", 0) == 0 || v.axiom.rfind("norm.", 0) == 0)
        product_axiom = true;
      CHECK(v.witness[0] >= 0);
    }
    CHECK(product_axiom);
  }
}

TEST_CASE("serialisation round-trips byte-identically on the shipped fixtures") {
  for (const char* name :
       {"one_element.pmq.json", "s3_transpositions_trivial.pmq.json",
        "s3_nonidentity_trivial.pmq.json", "s3_geodesic.pmq.json",
        "s4_geodesic.pmq.json", "z2_complete.pmq.json", "s3_complete.pmq.json"}) {
    const std::string bytes = slurp(data_file(name));
    ParsedDocument parsed = parse_pmq_document(bytes);
    CHECK(pmq_document(parsed.pmq, parsed.pair) == bytes);
  }
}

TEST_CASE("serialisation canonicalises arbitrary input formatting") {
  const std::string minified =
      R"({"unit":0,"size":1,"prod":[[0]],"conj":[[0]],"norm":[0]})";
  ParsedDocument first = parse_pmq_document(minified);
  const std::string canonical = pmq_document(first.pmq, first.pair);
  CHECK(canonical != minified);
  ParsedDocument second = parse_pmq_document(canonical);
  CHECK(pmq_document(second.pmq, second.pair) == canonical);
}

TEST_CASE("shipped fixtures are exactly the built-in constructions") {
  SymmetricGroup s3 = make_symmetric_group(3);
  SymmetricGroup s4 = make_symmetric_group(4);
  CHECK(parse_pmq_document(slurp(data_file("s3_transpositions_trivial.pmq.json")))
            .pmq.digest() == trivial_pmq(s3.group, s3.transpositions()).digest());
  CHECK(parse_pmq_document(slurp(data_file("s4_geodesic.pmq.json"))).pmq.digest() ==
        geodesic_pmq(s4).digest());
  CHECK(parse_pmq_document(slurp(data_file("z2_complete.pmq.json"))).pmq.digest() ==
        complete_pmq(cyclic_group(2)).digest());
  FiniteGroup s3_parsed = parse_group_document(slurp(data_file("s3.group.json")));
  CHECK(s3_parsed == s3.group);
}

TEST_CASE("crosscheck reports are deterministic and classify inputs correctly") {
  SymmetricGroup s3 = make_symmetric_group(3);

  FinitePMQ geo = geodesic_pmq(s3);
  auto checks = crosscheck(geo, std::nullopt);
  CHECK(all_checks_pass(checks));
  std::map<std::string, std::string> status;
  for (const auto& c : checks) status[c.name] = c.status;
  CHECK(status.at("model-cohomology") == "skip");
  CHECK(status.at("double-loop-betti") == "skip");
  CHECK(status.at("ring-commutativity") == "pass");
  CHECK(status.at("complete-collapse") == "skip");

  FinitePMQ z2 = complete_pmq(cyclic_group(2));
  auto z2_checks = crosscheck(z2, std::nullopt);
  CHECK(all_checks_pass(z2_checks));
  std::map<std::string, std::string> z2_status;
  for (const auto& c : z2_checks) z2_status[c.name] = c.status;
  CHECK(z2_status.at("complete-collapse") == "pass");
  CHECK(z2_status.at("completion-vs-braid-orbits") == "skip");

  const std::string bytes = pmq_document(geo);
  const std::string report = crosscheck_report(bytes, kDefaultStateBudget, checks);
  CHECK(report == crosscheck_report(bytes, kDefaultStateBudget,
                                    crosscheck(geo, std::nullopt)));
  const nlohmann::json parsed = nlohmann::json::parse(report);
  CHECK(parsed.at("command") == "crosscheck");
  CHECK(parsed.at("digest") == content_digest_hex(bytes));
  CHECK(parsed.at("version") == std::string(kVersion));
}

TEST_CASE("an exhausted budget skips checks instead of failing them") {
  SymmetricGroup s3 = make_symmetric_group(3);
  FinitePMQ q = trivial_pmq(s3.group, s3.transpositions());
  auto checks = crosscheck(q, std::nullopt, /*budget=*/2);
  CHECK(all_checks_pass(checks));
  for (const auto& c : checks) CHECK(c.status != "fail");
  std::map<std::string, std::string> status;
  for (const auto& c : checks) status[c.name] = c.status;
  CHECK(status.at("completion-vs-braid-orbits") == "skip");
  CHECK(status.at("monodromy-monoid-map") == "skip");
}

TEST_CASE("content digest is stable") {
  CHECK(content_digest_hex("") == "cbf29ce484222325");
  CHECK(content_digest_hex("pmqkit") != content_digest_hex(""));
  CHECK(content_digest_hex("pmqkit").size() == 16);
}
