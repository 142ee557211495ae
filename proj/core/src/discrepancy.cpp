#include "surfsing/discrepancy.hpp"

#include <algorithm>

#include "surfsing/error.hpp"

namespace surfsing {
namespace {

std::int64_t pair(const ResolutionGraph& graph, const std::vector<std::int64_t>& z, std::size_t i) {
  std::int64_t s = graph.self_int(i) * z[i];
  for (auto j : graph.neighbors(i)) s += z[j];
  return s;
}

void require_negative_definite(const ResolutionGraph& graph, std::string_view what) {
  if (!is_negative_definite(intersection_matrix(graph))) {
    throw AnalysisRefusal(std::string(what) + ": intersection matrix is not negative definite");
  }
}

}  // namespace

const Rational& DiscrepancyProfile::at(std::string_view id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return coefficients[i];
  }
  throw ValidationError(std::string(id), "profile has no vertex '" + std::string(id) + "'");
}

Rational DiscrepancyProfile::max_coefficient() const {
  if (coefficients.empty()) return Rational(0);
  return *std::max_element(coefficients.begin(), coefficients.end());
}

DiscrepancyProfile make_profile(std::vector<std::string> ids, std::vector<Rational> coefficients) {
  if (ids.size() != coefficients.size()) throw ContractViolation("profile ids/coefficients length mismatch");
  DiscrepancyProfile p;
  p.ids = std::move(ids);
  p.coefficients = std::move(coefficients);
  for (const auto& a : p.coefficients) p.index = lcm(p.index, a.denominator());
  p.numerical_index_only = classify_pair(p) == PairClass::NotLogTerminal;
  return p;
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::Canonical: return "Canonical";
    case PairClass::LogTerminalNotCanonical: return "LogTerminalNotCanonical";
    case PairClass::NotLogTerminal: return "NotLogTerminal";
  }
  return "?";
}

std::int64_t Cycle::at(std::string_view id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return multiplicities[i];
  }
  throw ValidationError(std::string(id), "cycle has no vertex '" + std::string(id) + "'");
}

DiscrepancyProfile discrepancies(const ResolutionGraph& graph) {
  const IntMatrix m = intersection_matrix(graph);
  std::vector<std::int64_t> rhs;
  rhs.reserve(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) rhs.push_back(graph.self_int(i) + 2 - graph.boundary(i));
  auto coefficients = solve_negative_definite(m, rhs);
  if (!coefficients) throw AnalysisRefusal("discrepancies: intersection matrix is not negative definite");
  std::vector<std::string> ids;
  ids.reserve(graph.size());
  for (const auto& v : graph.vertices()) ids.push_back(v.id);
  return make_profile(std::move(ids), std::move(*coefficients));
}

PairClass classify_pair(const DiscrepancyProfile& profile) {
  static const Rational one(1);
  bool positive = false;
  for (const auto& a : profile.coefficients) {
    if (a >= one) return PairClass::NotLogTerminal;
    positive = positive || a.sign() > 0;
  }
  return positive ? PairClass::LogTerminalNotCanonical : PairClass::Canonical;
}

Cycle fundamental_cycle(const ResolutionGraph& graph, std::vector<std::string>* warnings) {
  require_negative_definite(graph, "fundamental_cycle");
  if (warnings && graph.has_boundary()) {
    warnings->push_back("fundamental cycle ignores the boundary divisor");
  }
  const std::size_t n = graph.size();
  std::vector<std::int64_t> z(n, 1);
  for (;;) {
    std::size_t i = 0;
    while (i < n && pair(graph, z, i) <= 0) ++i;
    if (i == n) break;
    ++z[i];
  }
  Cycle out;
  for (const auto& v : graph.vertices()) out.ids.push_back(v.id);
  out.multiplicities = std::move(z);
  return out;
}

CycleNumbers cycle_numbers(const ResolutionGraph& graph, const Cycle& z) {
  if (z.multiplicities.size() != graph.size()) {
    throw ContractViolation("cycle is not supported on the graph's vertices");
  }
  CycleNumbers out;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out.z_squared += z.multiplicities[i] * pair(graph, z.multiplicities, i);
    // Adjunction on a smooth rational curve: K . C = -C^2 - 2.
    out.z_dot_k += z.multiplicities[i] * (-graph.self_int(i) - 2);
  }
  out.arithmetic_genus = Rational(1) + Rational(out.z_squared + out.z_dot_k) / Rational(2);
  return out;
}

Lemma2Result lemma2_check(const ResolutionGraph& graph) {
  const ResolutionGraph bare = graph.without_boundary();
  if (classify_pair(discrepancies(bare)) == PairClass::NotLogTerminal) {
    throw AnalysisRefusal("lemma2_check: the singularity is not log terminal");
  }
  Lemma2Result out;
  out.fundamental_cycle = fundamental_cycle(bare);
  out.numbers = cycle_numbers(bare, out.fundamental_cycle);
  out.inequality_holds = out.numbers.z_squared + out.numbers.z_dot_k < 0;
  if (out.numbers.arithmetic_genus == Rational(0)) out.multiplicity = -out.numbers.z_squared;
  return out;
}

}  // namespace surfsing
