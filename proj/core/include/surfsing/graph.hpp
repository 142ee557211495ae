#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfsing/linalg.hpp"

namespace surfsing {

/// An exceptional curve: rational, smooth, with self-intersection C^2 <= -1.
struct Vertex {
  std::string id;
  int self_int = -2;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string a;
  std::string b;
};

struct BoundaryIncidence {
  std::string vertex;
  int mult = 1;  // (D' . C_j)
};

/// Dual graph of the exceptional curves of a resolution, with the
/// intersection numbers of the boundary strict transform D'. Immutable;
/// every constructor validates and throws ValidationError naming the
/// offending element.
class ResolutionGraph {
 public:
  ResolutionGraph() = default;
  ResolutionGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges,
                  const std::vector<BoundaryIncidence>& boundary = {});

  /// Index-based constructor for generated graphs; edges are (i, j) pairs.
  static ResolutionGraph from_indices(std::vector<Vertex> vertices,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                      std::vector<int> boundary = {});

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::string& id(std::size_t i) const { return vertices_.at(i).id; }
  int self_int(std::size_t i) const { return vertices_.at(i).self_int; }

  /// Edges as index pairs (i < j), in construction order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }
  bool has_edge(std::size_t i, std::size_t j) const;

  /// (D' . C_i)
  int boundary(std::size_t i) const { return boundary_.at(i); }
  const std::vector<int>& boundary_vector() const noexcept { return boundary_; }
  bool has_boundary() const;

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Like index_of but throws ValidationError for an unknown id.
  std::size_t require_index(std::string_view id) const;

  /// Same curves and edges with the boundary dropped (the D = 0 case).
  ResolutionGraph without_boundary() const;

  bool is_connected() const;

  friend bool operator==(const ResolutionGraph& lhs, const ResolutionGraph& rhs);

 private:
  void check_and_index();

  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<int> boundary_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct ValidationReport {
  bool is_negative_definite = false;
  bool is_tree = false;
  bool is_minimal = false;  // every self_int <= -2
  std::vector<std::string> messages;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// M_jj = C_j^2, M_ij = 1 for an edge, 0 otherwise; in vertex order.
IntMatrix intersection_matrix(const ResolutionGraph& graph);

ValidationReport validate(const ResolutionGraph& graph);

}  // namespace surfsing
