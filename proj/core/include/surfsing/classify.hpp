#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfsing/graph.hpp"
#include "surfsing/rational.hpp"

namespace surfsing {

enum class ShapeKind { Chain, Fork, Other };
enum class LtType { A, D, E6, E7, E8, None };

std::string_view to_string(ShapeKind k);
std::string_view to_string(LtType t);

struct ShapeResult {
  ShapeKind shape = ShapeKind::Other;
  /// Fork only: the degree-3 vertex and its three arms, each listed from the
  /// center outward, ordered like `branch_determinants`.
  std::optional<std::string> center;
  std::vector<std::vector<std::string>> branches;
  /// Fork only: det(-M) of each arm, ascending.
  std::array<BigInt, 3> branch_determinants{};
  LtType lt_type = LtType::None;
};

enum class DynkinType { A, D, E, None };

struct DynkinLabel {
  DynkinType type = DynkinType::None;
  int rank = 0;

  /// "A_4", "D_5", "E6", "None"
  std::string str() const;
  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;
};

/// Determinant of the negated intersection matrix of a chain with the given
/// self-intersections (continuant of the -w_k).
BigInt chain_determinant(const std::vector<int>& self_ints);

/// Connected, at least one vertex, all degrees <= 2 (boundary ignored).
bool is_chain(const ResolutionGraph& graph);

/// Throws AnalysisRefusal for a graph with boundary, a disconnected graph or a
/// graph with a cycle.
ShapeResult shape(const ResolutionGraph& graph);

/// ADE label when every weight is -2 and the shape is a Dynkin diagram.
DynkinLabel dynkin_detect(const ResolutionGraph& graph);

/// Isomorphism-invariant encoding of a weighted tree (rooted at its
/// center). Throws AnalysisRefusal for non-trees.
std::string canonical_form(const ResolutionGraph& graph);

/// Visitor returns false to stop the enumeration early.
using GraphVisitor = std::function<bool(const ResolutionGraph&)>;

/// Every connected negative-definite tree on 1..max_vertices vertices with
/// weights in [min_weight, -2], once per isomorphism class, in a fixed order
/// (vertex count, tree shape, weights). Vertices are named C1..Cn.
void enumerate_graphs(int max_vertices, int min_weight, const GraphVisitor& visit);

std::vector<ResolutionGraph> collect_graphs(int max_vertices, int min_weight);

}  // namespace surfsing
