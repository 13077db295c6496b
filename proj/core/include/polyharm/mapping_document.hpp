#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polyharm/map.hpp"

namespace polyharm {

/// JSON transport form of a polyharmonic map:
///
///     {
///       "name": "F1",                        (optional)
///       "p": 2,
///       "truncation": 32,                    (optional, default 32)
///       "layers": [
///         {"k": 1, "analytic": [[1, 1.0, 0.0]], "anti_analytic": [[1, 0.333, 0.0]]},
///         {"k": 2, "analytic": [], "anti_analytic": [[1, 0.1666, 0.0]]}
///       ]
///     }
///
/// Coefficient lists are sparse [j, re, im] triples; absent entries are zero and
/// an absent (k=1, j=1) analytic entry defaults to 1.
struct MappingDocument {
  std::optional<std::string> name;
  PolyharmonicMap map;
};

/// Throws DocumentError naming the offending field (JSON pointer) or the byte
/// position of a syntax error, and for normalization violations.
MappingDocument parse_mapping_document(std::string_view text);

PolyharmonicMap parse_spec(std::string_view text);

/// Sparse JSON with shortest round-trip doubles; parse(serialize(F)) == F bit for bit.
std::string serialize_mapping(const LayeredSeries& f, const std::optional<std::string>& name = {});

}  // namespace polyharm
