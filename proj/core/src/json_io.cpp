#include "pmqkit/json_io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace pmqkit {

using nlohmann::json;

ParseError::ParseError(std::size_t byte, const std::string& message)
    : std::runtime_error(message), byte_(byte) {}

SchemaError::SchemaError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

json parse_json(const std::string& bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

void reject_unknown_fields(const json& obj, const std::string& path,
                           const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw SchemaError(path + "/" + key, "unknown field");
}

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> require_int_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(require_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<int>> require_table(const json& j, const std::string& path,
                                            bool allow_null) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    const std::string row_path = path + "/" + std::to_string(r);
    if (!row.is_array()) throw SchemaError(row_path, "expected an array");
    std::vector<int> cells;
    cells.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      const json& cell = row[c];
      const std::string cell_path = row_path + "/" + std::to_string(c);
      if (cell.is_null()) {
        if (!allow_null) throw SchemaError(cell_path, "null is not allowed here");
        cells.push_back(kUndefined);
      } else {
        cells.push_back(require_int(cell, cell_path));
      }
    }
    out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace

ParsedDocument parse_pmq_document(const std::string& bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  reject_unknown_fields(doc, "", {"size", "unit", "conj", "prod", "norm", "pair"});
  for (const char* field : {"size", "unit", "conj", "prod"})
    if (!doc.contains(field)) throw SchemaError(std::string("/") + field, "missing field");

  PmqTables tables;
  tables.size = require_int(doc["size"], "/size");
  tables.unit = require_int(doc["unit"], "/unit");
  tables.conj = require_table(doc["conj"], "/conj", false);
  tables.prod = require_table(doc["prod"], "/prod", true);
  if (doc.contains("norm")) tables.norm = require_int_vector(doc["norm"], "/norm");

  FinitePMQ pmq = FinitePMQ::from_tables(std::move(tables));
  std::optional<PMQGroupPair> pair;
  if (doc.contains("pair")) {
    const json& p = doc["pair"];
    if (!p.is_object()) throw SchemaError("/pair", "expected an object");
    reject_unknown_fields(p, "/pair", {"group_mult", "e", "r"});
    for (const char* field : {"group_mult", "e", "r"})
      if (!p.contains(field))
        throw SchemaError(std::string("/pair/") + field, "missing field");
    FiniteGroup group =
        FiniteGroup::from_mult_table(require_table(p["group_mult"], "/pair/group_mult", false));
    std::vector<int> e_map = require_int_vector(p["e"], "/pair/e");
    std::vector<std::vector<int>> r_action = require_table(p["r"], "/pair/r", false);
    pair = PMQGroupPair::from_parts(pmq, std::move(group), std::move(e_map),
                                    std::move(r_action));
  }
  return ParsedDocument{std::move(pmq), std::move(pair)};
}

std::string pmq_document(const FinitePMQ& q, const std::optional<PMQGroupPair>& pair) {
  json doc;
  doc["size"] = q.size();
  doc["unit"] = q.unit();
  doc["conj"] = q.tables().conj;
  json prod = json::array();
  for (int a = 0; a < q.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < q.size(); ++b) {
      if (q.prod_defined(a, b))
        row.push_back(q.prod(a, b));
      else
        row.push_back(nullptr);
    }
    prod.push_back(std::move(row));
  }
  doc["prod"] = std::move(prod);
  if (q.has_norm()) doc["norm"] = *q.tables().norm;
  if (pair) {
    json p;
    p["group_mult"] = pair->group().mult_table();
    p["e"] = pair->e_map();
    p["r"] = pair->r_action();
    doc["pair"] = std::move(p);
  }
  return doc.dump(2) + "\n";
}

FiniteGroup parse_group_document(const std::string& bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  reject_unknown_fields(doc, "", {"size", "mult"});
  for (const char* field : {"size", "mult"})
    if (!doc.contains(field)) throw SchemaError(std::string("/") + field, "missing field");
  const int size = require_int(doc["size"], "/size");
  auto mult = require_table(doc["mult"], "/mult", false);
  if (static_cast<int>(mult.size()) != size)
    throw SchemaError("/mult", "row count does not match size");
  return FiniteGroup::from_mult_table(std::move(mult));
}

std::string group_document(const FiniteGroup& group) {
  json doc;
  doc["size"] = group.size();
  doc["mult"] = group.mult_table();
  return doc.dump(2) + "\n";
}

std::string content_digest_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
  return os.str();
}

}  // namespace pmqkit
