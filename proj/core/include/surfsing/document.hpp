#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfsing/graph.hpp"

namespace surfsing {

/// A named resolution graph as stored on disk (see docs/graph-format.md).
struct GraphDocument {
  std::string name;
  ResolutionGraph graph;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws ParseError with the 1-based line and the offending field.
GraphDocument parse_document(std::string_view text);

/// Normalized text form; parse_document(serialize_document(d)) == d.
std::string serialize_document(const GraphDocument& doc);

GraphDocument read_document_file(const std::string& path);

/// A_1..A_8, D_4..D_8, E_6..E_8, example5-1, example5-2, single-2..single-7.
const std::vector<GraphDocument>& builtin_corpus();
std::optional<GraphDocument> find_builtin(std::string_view name);

}  // namespace surfsing
