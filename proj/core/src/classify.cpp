#include "surfsing/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "surfsing/error.hpp"

namespace surfsing {
namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

bool is_tree(const ResolutionGraph& g) {
  return !g.empty() && g.is_connected() && g.edges().size() + 1 == g.size();
}

// Leaf peeling; returns one or two centers.
std::vector<std::size_t> tree_centers(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer) {
      for (auto w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// AHU encoding with an optional per-vertex label.
std::string encode(const Adjacency& adj, std::size_t v, std::size_t parent, const std::vector<std::string>& label) {
  std::vector<std::string> kids;
  for (auto w : adj[v]) {
    if (w != parent) kids.push_back(encode(adj, w, v, label));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + (label.empty() ? std::string() : label[v]);
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string encode_free(const Adjacency& adj, const std::vector<std::string>& label) {
  std::string best;
  for (auto c : tree_centers(adj)) {
    std::string e = encode(adj, c, kNone, label);
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

Adjacency adjacency_of(const ResolutionGraph& g) {
  Adjacency adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) adj[i] = g.neighbors(i);
  return adj;
}

// --- enumeration ------------------------------------------------------------

// Two equal-length preorder blocks exchanged by a tree automorphism.
struct SwapBlocks {
  std::size_t first;
  std::size_t second;
  std::size_t length;
};

// An unlabeled tree relabeled in canonical preorder, so that every
// automorphism is a composition of swaps of adjacent isomorphic sibling
// blocks. A weighting is the lexicographically least in its orbit iff it is
// non-decreasing across every such pair of blocks.
struct TreeShape {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<SwapBlocks> swaps;
  std::string encoding;
};

class PreorderLabeler {
 public:
  explicit PreorderLabeler(const Adjacency& adj) : adj_(adj), label_(adj.size(), kNone) {}

  // Labels the subtree of v (not entering `parent`); returns its size.
  std::size_t visit(std::size_t v, std::size_t parent) {
    const std::size_t me = next_++;
    label_[v] = me;
    if (parent != kNone && label_[parent] != kNone) edges_.emplace_back(label_[parent], me);
    std::vector<std::pair<std::string, std::size_t>> kids;
    for (auto w : adj_[v]) {
      if (w != parent) kids.emplace_back(encode(adj_, w, v, {}), w);
    }
    std::sort(kids.begin(), kids.end());
    std::size_t size = 1;
    std::size_t prev_start = kNone;
    const std::string* prev_code = nullptr;
    for (const auto& [code, w] : kids) {
      const std::size_t start = next_;
      const std::size_t sub = visit(w, v);
      if (prev_code && *prev_code == code) swaps_.push_back({prev_start, start, sub});
      prev_start = start;
      prev_code = &code;
      size += sub;
    }
    return size;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<SwapBlocks> swaps_;
  std::size_t next_ = 0;

 private:
  const Adjacency& adj_;
  std::vector<std::size_t> label_;
};

TreeShape relabel(const Adjacency& adj) {
  TreeShape shape;
  shape.n = adj.size();
  shape.encoding = encode_free(adj, {});
  PreorderLabeler lab(adj);
  const auto centers = tree_centers(adj);
  if (centers.size() == 1) {
    lab.visit(centers[0], kNone);
  } else {
    // Central edge: lay out the smaller half first; equal halves may swap.
    const auto c1 = centers[0];
    const auto c2 = centers[1];
    std::string e1 = encode(adj, c1, c2, {});
    std::string e2 = encode(adj, c2, c1, {});
    const bool flip = e2 < e1;
    const auto first = flip ? c2 : c1;
    const auto second = flip ? c1 : c2;
    const std::size_t len = lab.visit(first, second);
    const std::size_t start2 = lab.next_;
    lab.visit(second, first);
    if (e1 == e2) lab.swaps_.push_back({0, start2, len});
  }
  shape.edges = std::move(lab.edges_);
  shape.swaps = std::move(lab.swaps_);
  return shape;
}

std::vector<TreeShape> free_trees(std::size_t n) {
  // Grow from (n-1)-vertex trees by attaching a leaf; dedupe on encoding.
  std::vector<Adjacency> layer{Adjacency(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Adjacency> seen;
    for (const auto& t : layer) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        Adjacency grown = t;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        seen.emplace(encode_free(grown, {}), std::move(grown));
      }
    }
    layer.clear();
    for (auto& [code, t] : seen) layer.push_back(std::move(t));
  }
  std::vector<TreeShape> out;
  for (const auto& t : layer) out.push_back(relabel(t));
  std::sort(out.begin(), out.end(), [](const TreeShape& a, const TreeShape& b) { return a.encoding < b.encoding; });
  return out;
}

bool orbit_minimal(const std::vector<int>& digits, const std::vector<SwapBlocks>& swaps) {
  for (const auto& s : swaps) {
    for (std::size_t k = 0; k < s.length; ++k) {
      const int a = digits[s.first + k];
      const int b = digits[s.second + k];
      if (a < b) break;
      if (a > b) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::Chain: return "Chain";
    case ShapeKind::Fork: return "Fork";
    case ShapeKind::Other: return "Other";
  }
  return "?";
}

std::string_view to_string(LtType t) {
  switch (t) {
    case LtType::A: return "A";
    case LtType::D: return "D";
    case LtType::E6: return "E6";
    case LtType::E7: return "E7";
    case LtType::E8: return "E8";
    case LtType::None: return "None";
  }
  return "?";
}

std::string DynkinLabel::str() const {
  switch (type) {
    case DynkinType::A: return "A_" + std::to_string(rank);
    case DynkinType::D: return "D_" + std::to_string(rank);
    case DynkinType::E: return "E" + std::to_string(rank);
    case DynkinType::None: return "None";
  }
  return "?";
}

BigInt chain_determinant(const std::vector<int>& self_ints) {
  BigInt before(1);  // d_{k-2}
  BigInt current(1);  // d_{k-1}, with d_0 = 1
  bool first = true;
  for (int w : self_ints) {
    BigInt next = BigInt(-w) * current - (first ? BigInt(0) : before);
    before = current;
    current = next;
    first = false;
  }
  return current;
}

bool is_chain(const ResolutionGraph& graph) {
  if (!is_tree(graph)) return false;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.degree(i) > 2) return false;
  }
  return true;
}

ShapeResult shape(const ResolutionGraph& graph) {
  if (graph.has_boundary()) throw AnalysisRefusal("shape: classification is defined for D = 0 only");
  if (!is_tree(graph)) throw AnalysisRefusal("shape: graph is not a tree");

  ShapeResult out;
  if (is_chain(graph)) {
    out.shape = ShapeKind::Chain;
    out.lt_type = LtType::A;
    return out;
  }
  std::vector<std::size_t> hubs;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.degree(i) >= 3) hubs.push_back(i);
  }
  if (hubs.size() != 1 || graph.degree(hubs[0]) != 3) return out;

  const std::size_t c = hubs[0];
  out.shape = ShapeKind::Fork;
  out.center = graph.id(c);
  std::vector<std::pair<BigInt, std::vector<std::string>>> arms;
  for (auto start : graph.neighbors(c)) {
    std::vector<std::string> ids;
    std::vector<int> weights;
    std::size_t prev = c;
    std::size_t cur = start;
    for (;;) {
      ids.push_back(graph.id(cur));
      weights.push_back(graph.self_int(cur));
      std::size_t next = kNone;
      for (auto w : graph.neighbors(cur)) {
        if (w != prev) next = w;
      }
      if (next == kNone) break;
      prev = cur;
      cur = next;
    }
    arms.emplace_back(chain_determinant(weights), std::move(ids));
  }
  std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < 3; ++k) {
    out.branch_determinants[k] = arms[k].first;
    out.branches.push_back(std::move(arms[k].second));
  }
  const auto& d = out.branch_determinants;
  if (d[0] == 2 && d[1] == 2 && d[2] >= 2) {
    out.lt_type = LtType::D;
  } else if (d[0] == 2 && d[1] == 3) {
    if (d[2] == 3) out.lt_type = LtType::E6;
    if (d[2] == 4) out.lt_type = LtType::E7;
    if (d[2] == 5) out.lt_type = LtType::E8;
  }
  return out;
}

DynkinLabel dynkin_detect(const ResolutionGraph& graph) {
  if (graph.has_boundary() || !is_tree(graph)) return {};
  for (const auto& v : graph.vertices()) {
    if (v.self_int != -2) return {};
  }
  const ShapeResult s = shape(graph);
  const int n = static_cast<int>(graph.size());
  switch (s.lt_type) {
    case LtType::A: return {DynkinType::A, n};
    case LtType::D: return {DynkinType::D, n};
    case LtType::E6: return {DynkinType::E, 6};
    case LtType::E7: return {DynkinType::E, 7};
    case LtType::E8: return {DynkinType::E, 8};
    case LtType::None: return {};
  }
  return {};
}

std::string canonical_form(const ResolutionGraph& graph) {
  if (!is_tree(graph)) throw AnalysisRefusal("canonical_form: graph is not a tree");
  std::vector<std::string> label(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    label[i] = std::to_string(-graph.self_int(i));
    if (graph.boundary(i) != 0) label[i] += "b" + std::to_string(graph.boundary(i));
  }
  return encode_free(adjacency_of(graph), label);
}

void enumerate_graphs(int max_vertices, int min_weight, const GraphVisitor& visit) {
  if (max_vertices < 1) throw ContractViolation("enumerate_graphs: max_vertices must be >= 1");
  if (min_weight > -2) throw ContractViolation("enumerate_graphs: min_weight must be <= -2");
  const int choices = -2 - min_weight + 1;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(max_vertices); ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("C" + std::to_string(i + 1));
    for (const TreeShape& tree : free_trees(n)) {
      IntMatrix m(n);
      for (const auto& [i, j] : tree.edges) {
        m(i, j) = 1;
        m(j, i) = 1;
      }
      std::vector<int> digits(n, 0);
      for (;;) {
        if (orbit_minimal(digits, tree.swaps)) {
          for (std::size_t i = 0; i < n; ++i) m(i, i) = -2 - digits[i];
          if (is_negative_definite(m)) {
            std::vector<Vertex> vertices;
            vertices.reserve(n);
            for (std::size_t i = 0; i < n; ++i) vertices.push_back({names[i], -2 - digits[i]});
            if (!visit(ResolutionGraph::from_indices(std::move(vertices), tree.edges))) return;
          }
        }
        // Odometer with the last position fastest: lexicographic order.
        std::size_t k = n;
        while (k > 0 && digits[k - 1] == choices - 1) digits[--k] = 0;
        if (k == 0) break;
        ++digits[k - 1];
      }
    }
  }
}

std::vector<ResolutionGraph> collect_graphs(int max_vertices, int min_weight) {
  std::vector<ResolutionGraph> out;
  enumerate_graphs(max_vertices, min_weight, [&](const ResolutionGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace surfsing
