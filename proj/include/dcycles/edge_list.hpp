#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "dcycles/graph.hpp"

namespace dcycles {

using AnyGraph = std::variant<Graph, Digraph>;

/// Edge-list text format: a header line `U n m` or `D n m`, then m lines
/// `u v`. Lines starting with `#` are comments. Throws InvalidInput.
AnyGraph parse_edge_list(std::string_view text);
AnyGraph read_edge_list(const std::string& path);

/// Canonical serialization: header, then edges (u < v) or arcs in sorted
/// order, one per line, `\n` terminated.
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Digraph& d);
std::string to_edge_list(const AnyGraph& g);

/// Content hash of the canonical serialization, e.g. "fnv1a64:0123abcd...".
std::string content_hash(const AnyGraph& g);

}  // namespace dcycles
