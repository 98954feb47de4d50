#pragma once

#include <string>

#include "graphconf/builtin_graphs.hpp"
#include "graphconf/discrete_config.hpp"
#include "graphconf/graph.hpp"

namespace graphconf {

/// Parse the graph JSON schema:
/// {
///   "vertices": ["v", ...],
///   "edges":    [{"id": "e", "tail": "u", "head": "v"}, ...],
///   "rotations": {"v": ["e", ...], ...},                       // optional
///   "outer_face": {"edge": "e", "direction": "forward"|"reverse"}  // optional
/// }
/// Throws ParseError for syntax or schema violations, MalformedGraph for
/// graph invariant violations.
GraphInput parse_graph_json(const std::string& text);

/// Serialize back to the same schema (two-space indent, sorted keys).
std::string graph_to_json(const GraphInput& input);

/// DOT rendering of the graph itself.
std::string graph_to_dot(const Graph& g);

/// DOT rendering of the 1-skeleton of D(Gamma, 2).
std::string skeleton_to_dot(const DiscreteConfigComplex& complex);

/// FNV-1a content hash used as the input digest of reports.
std::string content_digest(const std::string& bytes);

}  // namespace graphconf
