#pragma once
// Serialization: graph6 (canonical interchange), DOT (for eyeballing), JSON.

#include <string>

#include "propeller/graph.hpp"

namespace propeller {

// Standard graph6 encoding; uses the 3-byte long form for > 62 vertices.
std::string to_graph6(const LabeledGraph& g);

// DOT with vertex names; propeller-built graphs get kind=... edge attributes.
std::string to_dot(const LabeledGraph& g, const std::string& name = "G");

// JSON object with names, labels, and the edge list (kinds when known).
std::string to_json(const LabeledGraph& g);

}  // namespace propeller
