#include "surfsing/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "surfsing/error.hpp"

namespace surfsing {

ResolutionGraph::ResolutionGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges,
                                 const std::vector<BoundaryIncidence>& boundary)
    : vertices_(std::move(vertices)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.id.empty()) throw ValidationError("vertex #" + std::to_string(i + 1), "vertex with empty id");
    if (!index.emplace(v.id, i).second) {
      throw ValidationError(v.id, "duplicate vertex id '" + v.id + "'");
    }
  }
  auto lookup = [&](const std::string& id, const std::string& where) {
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError(id, where + " references unknown vertex '" + id + "'");
    return it->second;
  };
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    const std::string label = "edge " + e.a + "-" + e.b;
    const auto i = lookup(e.a, label);
    const auto j = lookup(e.b, label);
    edges_.emplace_back(i, j);
  }
  boundary_.assign(vertices_.size(), 0);
  for (const auto& b : boundary) {
    const auto i = lookup(b.vertex, "boundary entry");
    if (b.mult < 0) {
      throw ValidationError(b.vertex, "boundary multiplicity of '" + b.vertex + "' is negative");
    }
    boundary_[i] += b.mult;
  }
  check_and_index();
}

ResolutionGraph ResolutionGraph::from_indices(
    std::vector<Vertex> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::vector<int> boundary) {
  ResolutionGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    if (i >= g.vertices_.size() || j >= g.vertices_.size()) {
      throw ValidationError("edge", "edge index out of range");
    }
    g.edges_.emplace_back(i, j);
  }
  if (boundary.empty()) boundary.assign(g.vertices_.size(), 0);
  if (boundary.size() != g.vertices_.size()) {
    throw ValidationError("boundary", "boundary vector length does not match vertex count");
  }
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i] < 0) throw ValidationError(g.vertices_[i].id, "negative boundary multiplicity");
  }
  g.boundary_ = std::move(boundary);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    const auto& v = g.vertices_[i];
    if (v.id.empty()) throw ValidationError("vertex", "vertex with empty id");
    for (std::size_t j = 0; j < i; ++j) {
      if (g.vertices_[j].id == v.id) throw ValidationError(v.id, "duplicate vertex id '" + v.id + "'");
    }
  }
  g.check_and_index();
  return g;
}

void ResolutionGraph::check_and_index() {
  for (const auto& v : vertices_) {
    if (v.self_int > -1) {
      throw ValidationError(v.id, "self-intersection of '" + v.id + "' is " + std::to_string(v.self_int) +
                                      "; exceptional curves need C^2 <= -1");
    }
  }
  adjacency_.assign(vertices_.size(), {});
  for (auto& [i, j] : edges_) {
    if (i == j) throw ValidationError(vertices_[i].id, "self-loop on '" + vertices_[i].id + "'");
    if (i > j) std::swap(i, j);
    if (std::find(adjacency_[i].begin(), adjacency_[i].end(), j) != adjacency_[i].end()) {
      throw ValidationError(vertices_[i].id + "-" + vertices_[j].id,
                            "duplicate edge " + vertices_[i].id + "-" + vertices_[j].id +
                                " (only transversal single intersections are representable)");
    }
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool ResolutionGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto& nbrs = adjacency_.at(i);
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool ResolutionGraph::has_boundary() const {
  return std::any_of(boundary_.begin(), boundary_.end(), [](int b) { return b != 0; });
}

std::optional<std::size_t> ResolutionGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ResolutionGraph::require_index(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw ValidationError(std::string(id), "unknown vertex '" + std::string(id) + "'");
}

ResolutionGraph ResolutionGraph::without_boundary() const {
  ResolutionGraph g = *this;
  std::fill(g.boundary_.begin(), g.boundary_.end(), 0);
  return g;
}

bool ResolutionGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertices_.size();
}

bool operator==(const ResolutionGraph& lhs, const ResolutionGraph& rhs) {
  if (lhs.vertices_ != rhs.vertices_ || lhs.boundary_ != rhs.boundary_) return false;
  auto a = lhs.edges_;
  auto b = rhs.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

IntMatrix intersection_matrix(const ResolutionGraph& graph) {
  IntMatrix m(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) m(i, i) = graph.self_int(i);
  for (const auto& [i, j] : graph.edges()) {
    m(i, j) = 1;
    m(j, i) = 1;
  }
  return m;
}

ValidationReport validate(const ResolutionGraph& graph) {
  ValidationReport report;
  report.is_negative_definite = is_negative_definite(intersection_matrix(graph));
  report.is_tree = graph.is_connected() && graph.edges().size() + 1 == std::max<std::size_t>(graph.size(), 1);
  report.is_minimal = std::all_of(graph.vertices().begin(), graph.vertices().end(),
                                  [](const Vertex& v) { return v.self_int <= -2; });
  if (!report.is_negative_definite) {
    report.messages.push_back("intersection matrix is not negative definite");
  }
  if (!report.is_tree) {
    report.messages.push_back(graph.is_connected() ? "graph contains a cycle; shape classification will refuse it"
                                                   : "graph is disconnected");
  }
  for (const auto& v : graph.vertices()) {
    if (v.self_int == -1) report.messages.push_back("(-1)-curve " + v.id + ": resolution is not minimal");
  }
  return report;
}

}  // namespace surfsing
