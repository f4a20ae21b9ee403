#pragma once

#include "tangle/cusp.hpp"
#include "tangle/homomorphism.hpp"
#include "tangle/labelled_graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <string_view>

namespace tangle {

using Json = nlohmann::ordered_json;

/// {"rank": m, "degree": n, "images": ["(15)(687)", ...]}
Json to_json(const Homomorphism &phi);
Homomorphism hom_from_json(const Json &doc);

/// {"rank": m, "vertices": V, "edges": [[src, dst, label], ...],
///  "basepoint": v}. Edges are printed sorted by (label, src, dst). A graph
/// with duplicated edges loads in the prefolded state.
Json to_json(const LabelledGraph &g, std::size_t basepoint = 0);
RootedGraph graph_from_json(const Json &doc);

/// {"genus": g, "punctures": p, "pairs": [{"id": ..., "base_length": "0.5",
///  "a1": "a", "a2": "b"}, ...]}. Lengths must be decimal strings.
Json to_json(const BaseSurface &surface);
BaseSurface surface_from_json(const Json &doc);

/// Parses a decimal string such as "0.5" or "12"; no sign, no exponent.
double parse_decimal(std::string_view text);

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path &path);

} // namespace tangle
