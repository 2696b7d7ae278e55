#pragma once

// Wire formats: the graph JSON contract and DOT export.

#include <string>

#include <json.hpp>

#include "parikh/graphs.hpp"

namespace parikh {

/// {"edges": [["x","y"], ...], "x": [...], "y": [...]} with sorted edge list;
/// stable under re-serialization.
nlohmann::json graph_to_json(const BipartiteGraph& g);

/// Parses and validates the graph JSON contract; duplicate edges, repeated
/// labels and cross-part violations are rejected with DomainError.
BipartiteGraph graph_from_json(const nlohmann::json& j);

BipartiteGraph graph_from_json_text(const std::string& text);

/// Single-line serialization used as the canonical input string in reports.
std::string graph_json_line(const BipartiteGraph& g);

/// Undirected DOT with part X on one rank and part Y on the other.
std::string graph_to_dot(const BipartiteGraph& g);

} // namespace parikh
