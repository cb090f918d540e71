#pragma once

// JSON formats.
//
//   ring      {"p": 2, "s": 2, "backend": "int" | "poly"}
//   element   integer (int backend) or array of s coefficients, lowest
//             degree first (poly backend)
//   matrix    array of rows, each an array of elements
//   code      {"ring": ring, "n": int, "generators": matrix, "name"?: str, ...}
//   big ints  decimal strings
//
// Unknown keys of a code document are kept verbatim so that documents
// written by the tool (which add "profile", "cardinality", ...) read back and
// re-serialise byte for byte.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringcodes/code.hpp"
#include "ringcodes/enumerate.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes::io {

using nlohmann::json;

json ring_to_json(const ChainRing& ring);
ChainRing ring_from_json(const json& j);

json element_to_json(const ChainRing& ring, ChainRing::Value v);
ChainRing::Value element_from_json(const ChainRing& ring, const json& j);

json matrix_to_json(const RingMatrix& m);
/// `cols` is needed to type an empty matrix; when nullopt it is read off the
/// first row.
RingMatrix matrix_from_json(const ChainRing& ring, const json& j, std::optional<std::size_t> cols = {});

json profile_to_json(const TypeProfile& profile);
json permutation_to_json(const ColumnPermutation& perm);

json bigint_to_json(const BigInt& v);
/// Accepts decimal strings and JSON integers.
BigInt bigint_from_json(const json& j);

json distribution_to_json(const WeightDistribution& a);
std::vector<BigInt> distribution_from_json(const json& j);

struct CodeDocument {
  ChainRing ring;
  std::size_t n;
  std::vector<std::vector<std::uint64_t>> generators;
  std::optional<std::string> name;
  json extra = json::object();  // any other keys, preserved
};

CodeDocument parse_code_document(const json& j);
CodeDocument parse_code_document(const std::string& text);
json to_json(const CodeDocument& doc);

LinearCode to_code(const CodeDocument& doc);

/// Document for a code: standard-form generators in original coordinates
/// plus "profile", "rank", "free_rank" and "cardinality".
CodeDocument describe_code(const LinearCode& code, std::optional<std::string> name = {});

}  // namespace ringcodes::io
