#include <string>
#include <vector>

#include "surfsing/document.hpp"

namespace surfsing {
namespace {

std::string cid(std::size_t k) { return "C" + std::to_string(k); }

GraphDocument chain_with_tail(std::string name, std::size_t chain_length, std::size_t attach_to) {
  // C1 - ... - C(chain_length) and one extra vertex hung on C(attach_to).
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= chain_length + 1; ++k) vertices.push_back({cid(k), -2});
  for (std::size_t k = 1; k < chain_length; ++k) edges.push_back({cid(k), cid(k + 1)});
  edges.push_back({cid(attach_to), cid(chain_length + 1)});
  return {std::move(name), ResolutionGraph(std::move(vertices), edges)};
}

std::vector<GraphDocument> build() {
  std::vector<GraphDocument> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (std::size_t k = 1; k <= n; ++k) vertices.push_back({cid(k), -2});
    for (std::size_t k = 1; k < n; ++k) edges.push_back({cid(k), cid(k + 1)});
    out.push_back({"A" + std::to_string(n), ResolutionGraph(std::move(vertices), edges)});
  }
  for (std::size_t n = 4; n <= 8; ++n) out.push_back(chain_with_tail("D" + std::to_string(n), n - 1, n - 2));
  for (std::size_t n = 6; n <= 8; ++n) out.push_back(chain_with_tail("E" + std::to_string(n), n - 1, 3));

  out.push_back({"example5-1", ResolutionGraph({{"C1", -2}, {"C2", -2}, {"C3", -2}, {"C4", -3}},
                                               {{"C1", "C2"}, {"C1", "C3"}, {"C1", "C4"}})});
  out.push_back({"example5-2", ResolutionGraph({{"C1", -2}, {"C2", -2}, {"C3", -2}, {"C4", -2}, {"C5", -3}},
                                               {{"C1", "C2"}, {"C1", "C3"}, {"C3", "C4"}, {"C1", "C5"}})});
  for (int n = 2; n <= 7; ++n) {
    out.push_back({"single-" + std::to_string(n), ResolutionGraph({{"C1", -n}}, {})});
  }
  return out;
}

}  // namespace

const std::vector<GraphDocument>& builtin_corpus() {
  static const std::vector<GraphDocument> corpus = build();
  return corpus;
}

std::optional<GraphDocument> find_builtin(std::string_view name) {
  for (const auto& doc : builtin_corpus()) {
    if (doc.name == name) return doc;
  }
  return std::nullopt;
}

}  // namespace surfsing
