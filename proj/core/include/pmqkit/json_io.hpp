#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pmqkit/pair.hpp"

namespace pmqkit {

/// Ill-formed JSON: carries the byte offset of the first error.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t byte, const std::string& message);
  std::size_t byte() const { return byte_; }

 private:
  std::size_t byte_;
};

/// Well-formed JSON that does not match the document schema. `path` points
/// at the offending value; unknown fields are rejected.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ParsedDocument {
  FinitePMQ pmq;
  std::optional<PMQGroupPair> pair;
};

/// Parses and validates a PMQ document:
///   {"size":n, "unit":u, "conj":[[...]], "prod":[[..., null, ...]],
///    "norm":[...]?, "pair":{"group_mult":[[...]], "e":[...], "r":[[...]]}?}
/// null encodes an undefined product. Throws ParseError, SchemaError or
/// ValidationError.
ParsedDocument parse_pmq_document(const std::string& bytes);

/// Canonical serialisation: two-space indent, keys sorted, trailing newline.
/// parse/serialise round-trips are byte-stable.
std::string pmq_document(const FinitePMQ& q,
                         const std::optional<PMQGroupPair>& pair = std::nullopt);

/// Group documents: {"size":n, "mult":[[...]]}.
FiniteGroup parse_group_document(const std::string& bytes);
std::string group_document(const FiniteGroup& group);

/// FNV-1a content hash as 16 hex digits; used as the input digest in reports.
std::string content_digest_hex(const std::string& bytes);

}  // namespace pmqkit
