#include "surfsing/blowup.hpp"

#include <unordered_set>

#include "surfsing/error.hpp"

namespace surfsing {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fresh_id(const ResolutionGraph& graph) {
  std::unordered_set<std::string> used;
  for (const auto& v : graph.vertices()) used.insert(v.id);
  for (std::size_t k = 1;; ++k) {
    std::string candidate = "E" + std::to_string(k);
    if (!used.contains(candidate)) return candidate;
  }
}

}  // namespace

BlowUpCenter parse_center(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(0, "center", "center spec '" + std::string(spec) + "' lacks a kind prefix");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "free" && !arg.empty()) return FreePoint{std::string(arg)};
  if (kind == "edge") {
    const auto comma = arg.find(',');
    if (comma != std::string_view::npos && comma > 0 && comma + 1 < arg.size()) {
      return EdgePoint{std::string(arg.substr(0, comma)), std::string(arg.substr(comma + 1))};
    }
  }
  if (kind == "boundary" && !arg.empty()) {
    if (arg == "-") return BoundaryPoint{std::nullopt};
    return BoundaryPoint{std::string(arg)};
  }
  throw ParseError(0, "center",
                   "malformed center spec '" + std::string(spec) +
                       "' (expected free:ID, edge:ID,ID, boundary:ID or boundary:-)");
}

std::string to_string(const BlowUpCenter& center) {
  return std::visit(overloaded{
                        [](const FreePoint& c) { return "free:" + c.vertex; },
                        [](const EdgePoint& c) { return "edge:" + c.first + "," + c.second; },
                        [](const BoundaryPoint& c) { return "boundary:" + c.vertex.value_or("-"); },
                    },
                    center);
}

void check_center(const ResolutionGraph& graph, const BlowUpCenter& center) {
  const std::string name = to_string(center);
  auto need = [&](const std::string& id) {
    auto i = graph.index_of(id);
    if (!i) throw ValidationError(name, "center " + name + ": unknown vertex '" + id + "'");
    return *i;
  };
  std::visit(overloaded{
                 [&](const FreePoint& c) { need(c.vertex); },
                 [&](const EdgePoint& c) {
                   const auto i = need(c.first);
                   const auto j = need(c.second);
                   if (!graph.has_edge(i, j)) {
                     throw ValidationError(name, "center " + name + ": " + c.first + " and " + c.second +
                                                     " do not meet");
                   }
                 },
                 [&](const BoundaryPoint& c) {
                   if (!c.vertex) return;
                   if (graph.boundary(need(*c.vertex)) < 1) {
                     throw ValidationError(name, "center " + name + ": the boundary does not meet " + *c.vertex);
                   }
                 },
             },
             center);
}

BlowUpResult blow_up(const ResolutionGraph& graph, const DiscrepancyProfile& profile,
                     const BlowUpCenter& center) {
  check_center(graph, center);
  if (profile.size() != graph.size()) throw ContractViolation("profile does not match graph");
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (profile.ids[i] != graph.id(i)) throw ContractViolation("profile does not match graph");
  }

  std::vector<Vertex> vertices = graph.vertices();
  std::vector<std::pair<std::size_t, std::size_t>> edges = graph.edges();
  std::vector<int> boundary = graph.boundary_vector();
  std::vector<Rational> coeffs = profile.coefficients;

  const std::string e_id = fresh_id(graph);
  const std::size_t e = vertices.size();
  vertices.push_back({e_id, -1});
  boundary.push_back(0);

  // Coefficient of the new curve: -1 + (sum of coefficients of the
  // exceptional curves through the point) + (multiplicity of D' there).
  Rational a_e;
  std::visit(overloaded{
                 [&](const FreePoint& c) {
                   const auto v = graph.require_index(c.vertex);
                   vertices[v].self_int -= 1;
                   edges.emplace_back(v, e);
                   a_e = coeffs[v] - Rational(1);
                 },
                 [&](const EdgePoint& c) {
                   auto u = graph.require_index(c.first);
                   auto v = graph.require_index(c.second);
                   std::erase_if(edges, [&](const auto& ed) {
                     return (ed.first == u && ed.second == v) || (ed.first == v && ed.second == u);
                   });
                   vertices[u].self_int -= 1;
                   vertices[v].self_int -= 1;
                   edges.emplace_back(u, e);
                   edges.emplace_back(v, e);
                   a_e = coeffs[u] + coeffs[v] - Rational(1);
                 },
                 [&](const BoundaryPoint& c) {
                   boundary[e] = 1;
                   if (!c.vertex) {
                     a_e = Rational(0);
                     return;
                   }
                   const auto v = graph.require_index(*c.vertex);
                   vertices[v].self_int -= 1;
                   boundary[v] -= 1;
                   edges.emplace_back(v, e);
                   a_e = coeffs[v] + Rational(1) - Rational(1);
                 },
             },
             center);

  coeffs.push_back(a_e);
  std::vector<std::string> ids = profile.ids;
  ids.push_back(e_id);
  return BlowUpResult{ResolutionGraph::from_indices(std::move(vertices), edges, std::move(boundary)),
                      make_profile(std::move(ids), std::move(coeffs)), e_id};
}

bool verify_transport(const ResolutionGraph& graph, const BlowUpCenter& center) {
  const auto before = discrepancies(graph);
  const auto after = blow_up(graph, before, center);
  const auto direct = discrepancies(after.graph);
  return direct.coefficients == after.profile.coefficients && direct.index == after.profile.index;
}

}  // namespace surfsing
