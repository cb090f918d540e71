#include "ringcodes/io.hpp"

#include "ringcodes/error.hpp"

namespace ringcodes::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_unsigned(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

json ring_to_json(const ChainRing& ring) {
  return {{"p", ring.p()}, {"s", ring.s()}, {"backend", backend_name(ring.backend())}};
}

ChainRing ring_from_json(const json& j) {
  const auto p = as_unsigned(field(j, "p"), "ring.p");
  const auto s = as_unsigned(field(j, "s"), "ring.s");
  Backend backend = Backend::Integer;
  if (j.contains("backend")) {
    if (!j["backend"].is_string()) throw ParseError("ring.backend must be a string");
    try {
      backend = parse_backend(j["backend"].get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (p > 0xFFFFFFFFULL || s > 64) throw ParseError("ring parameters out of range");
  try {
    return {static_cast<unsigned>(p), static_cast<unsigned>(s), backend};
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json element_to_json(const ChainRing& ring, ChainRing::Value v) {
  if (ring.backend() == Backend::Integer) return v;
  return ring.digits(v);
}

ChainRing::Value element_from_json(const ChainRing& ring, const json& j) {
  if (ring.backend() == Backend::Integer) {
    if (!j.is_number_integer()) throw ParseError("ring elements of an int ring are integers");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || !ring.contains(static_cast<std::uint64_t>(v)))
      throw ParseError("element " + std::to_string(v) + " is not in [0, " + std::to_string(ring.size()) + ")");
    return static_cast<ChainRing::Value>(v);
  }
  if (!j.is_array()) throw ParseError("ring elements of a poly ring are coefficient arrays");
  std::vector<unsigned> coeffs;
  for (const auto& c : j) {
    const auto v = as_unsigned(c, "coefficient");
    if (v >= ring.p()) throw ParseError("coefficient " + std::to_string(v) + " is not in [0, p)");
    coeffs.push_back(static_cast<unsigned>(v));
  }
  if (coeffs.size() != ring.s())
    throw ParseError("expected " + std::to_string(ring.s()) + " coefficients, got " + std::to_string(coeffs.size()));
  return ring.from_digits(coeffs);
}

json matrix_to_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (auto v : m.row(r)) row.push_back(element_to_json(m.ring(), v));
    rows.push_back(std::move(row));
  }
  return rows;
}

RingMatrix matrix_from_json(const ChainRing& ring, const json& j, std::optional<std::size_t> cols) {
  if (!j.is_array()) throw ParseError("a matrix is an array of rows");
  if (!cols) {
    if (j.empty()) throw ParseError("cannot infer the width of an empty matrix");
    if (!j.front().is_array()) throw ParseError("a matrix row must be an array");
    cols = j.front().size();
  }
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("a matrix row must be an array");
    if (row.size() != *cols)
      throw ParseError("row of length " + std::to_string(row.size()) + ", expected " + std::to_string(*cols));
    auto& out = rows.emplace_back();
    for (const auto& e : row) out.push_back(element_from_json(ring, e));
  }
  return {ring, *cols, rows};
}

json profile_to_json(const TypeProfile& profile) { return profile.counts; }

json permutation_to_json(const ColumnPermutation& perm) { return perm.one_based_targets(); }

json bigint_to_json(const BigInt& v) { return v.str(); }

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const bool digits_only = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                             s != "-";
    if (!digits_only) throw ParseError("\"" + s + "\" is not a decimal integer");
    return BigInt(s);
  }
  throw ParseError("expected a decimal string or an integer");
}

json distribution_to_json(const WeightDistribution& a) {
  json out = json::array();
  for (const auto& v : a.counts()) out.push_back(v.str());
  return out;
}

std::vector<BigInt> distribution_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a distribution is a nonempty array");
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(bigint_from_json(v));
  return out;
}

CodeDocument parse_code_document(const json& j) {
  const auto ring = ring_from_json(field(j, "ring"));
  const auto n = static_cast<std::size_t>(as_unsigned(field(j, "n"), "n"));
  const auto g = matrix_from_json(ring, field(j, "generators"), n);
  CodeDocument doc{ring, n, g.to_rows(), std::nullopt, json::object()};
  for (const auto& [key, value] : j.items()) {
    if (key == "ring" || key == "n" || key == "generators") continue;
    if (key == "name") {
      if (!value.is_string()) throw ParseError("name must be a string");
      doc.name = value.get<std::string>();
      continue;
    }
    doc.extra[key] = value;
  }
  return doc;
}

CodeDocument parse_code_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_code_document(j);
}

json to_json(const CodeDocument& doc) {
  json j = doc.extra;
  j["ring"] = ring_to_json(doc.ring);
  j["n"] = doc.n;
  j["generators"] = matrix_to_json(RingMatrix(doc.ring, doc.n, doc.generators));
  if (doc.name) j["name"] = *doc.name;
  return j;
}

LinearCode to_code(const CodeDocument& doc) { return LinearCode::from_generators(doc.ring, doc.n, doc.generators); }

CodeDocument describe_code(const LinearCode& code, std::optional<std::string> name) {
  CodeDocument doc{code.ring(), code.length(), code.generator_matrix().to_rows(), std::move(name), json::object()};
  doc.extra["profile"] = profile_to_json(code.profile());
  doc.extra["rank"] = code.rank();
  doc.extra["free_rank"] = code.free_rank();
  doc.extra["cardinality"] = bigint_to_json(code.cardinality());
  return doc;
}

}  // namespace ringcodes::io
