#pragma once

#include <filesystem>
#include <iosfwd>

#include "infrank/graph.hpp"

namespace infrank {

/// Reads a SNAP-style edge list: `#` comment lines, then `src dst [weight]`
/// per line, whitespace separated. Columns past the third are ignored, and the
/// third is only read when `options.weighted` is set.
///
/// Throws ParseError (with line number) on a malformed line and
/// ValidationError on a negative weight or an edge-free input.
Graph load_edge_list(std::istream& in, LoadOptions options);

/// As load_edge_list, prefixing error messages with the file path.
Graph load_edge_list_file(const std::filesystem::path& path, LoadOptions options);

/// Writes the graph back as an edge list in original IDs (each undirected edge
/// once, smaller index first). Reloading with the same options reproduces the
/// adjacency structure exactly. Self-loops are not written, except that an
/// isolated node is emitted as `id id` so it survives the round trip.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace infrank
