#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "exsym/immersion.hpp"
#include "exsym/triple.hpp"

namespace exsym::io {

inline constexpr const char* kSchemaVersion = "1";

struct QuadIndices {
  std::vector<std::size_t> lstar, a, l;
};

/// A triple definition as stored on disk. Loading checks structure only
/// (shapes, indices, rationals); axioms are left to validate_triple.
struct TripleDocument {
  ExtrinsicTriple<Rational> triple;
  std::optional<QuadIndices> quad;
  bool assert_indecomposable = false;
};

/// Throws Error(Parse) with a JSON-pointer location (e.g. "/gram/1/0") on malformed input.
TripleDocument parse_triple_document(const nlohmann::json& j);
/// Throws Error(Parse) on I/O failure or invalid JSON (with byte offset).
TripleDocument load_triple_document(const std::string& path);

/// Structure constants are written sparsely, both orders of each pair, 0-based.
nlohmann::json to_json(const TripleDocument& doc);
TripleDocument make_document(const ExtrinsicTriple<Rational>& t, std::optional<QuadIndices> quad = std::nullopt);
void save_json(const nlohmann::json& j, const std::string& path);

/// {"kind": "polynomial_immersion", "name", "domain_dim", "metric", "components", optional "grid_scale"}.
/// Each component is a list of {"coeff": "p/q", "exponents": [...]} terms.
Immersion parse_immersion_document(const nlohmann::json& j);
Immersion load_immersion_document(const std::string& path);

/// Reads and parses a JSON file, throwing Error(Parse) on failure.
nlohmann::json read_json(const std::string& path);

}  // namespace exsym::io
