#pragma once

// JSON serialization of classification results.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pbent/construct.hpp"
#include "pbent/spectral.hpp"

namespace pbent {

using json = nlohmann::json;

/// {p, n, m, components: [{lambda_index, bent, weakly_regular, epsilon, z,
/// amplitude}], vectorial_bent, vectorial_weakly_regular, plateaued,
/// shared_amplitude}; absent optionals become null.
json to_json(const VectorialReport& report);

json to_json(const NegativeReport& report);

json u_sets_to_json(const std::vector<std::vector<Index>>& sets);

/// FNV-1a, 64 bit, printed as 16 hex digits.
std::string digest(std::string_view bytes);

struct Provenance {
  std::string recipe_digest;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;  // informational only
};

/// Adds tool_version, recipe_digest, seed and elapsed_ms to an object.
void add_provenance(json& report, const Provenance& prov);

/// One line per component plus a summary line.
std::string format_report(const VectorialReport& report);

}  // namespace pbent
