#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfsing/graph.hpp"
#include "surfsing/rational.hpp"

namespace surfsing {

/// Coefficients a_j of mu^*(K_S + D) = K_S' + D' + sum a_j C_j, in vertex
/// order, and the index r = lcm of their denominators.
struct DiscrepancyProfile {
  std::vector<std::string> ids;
  std::vector<Rational> coefficients;
  BigInt index{1};
  /// Set when the pair is not log terminal: r is then only the numerical
  /// index of E and need not be the Cartier index.
  bool numerical_index_only = false;

  std::size_t size() const noexcept { return coefficients.size(); }
  const Rational& at(std::string_view id) const;
  Rational max_coefficient() const;

  friend bool operator==(const DiscrepancyProfile&, const DiscrepancyProfile&) = default;
};

/// Builds a profile and derives its index from the coefficients.
DiscrepancyProfile make_profile(std::vector<std::string> ids, std::vector<Rational> coefficients);

enum class PairClass { Canonical, LogTerminalNotCanonical, NotLogTerminal };

std::string_view to_string(PairClass c);

/// Multiplicities of an exceptional cycle, in vertex order.
struct Cycle {
  std::vector<std::string> ids;
  std::vector<std::int64_t> multiplicities;

  std::int64_t at(std::string_view id) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CycleNumbers {
  std::int64_t z_squared = 0;
  std::int64_t z_dot_k = 0;
  Rational arithmetic_genus;  // p_a = 1 + (Z^2 + Z.K) / 2

  friend bool operator==(const CycleNumbers&, const CycleNumbers&) = default;
};

struct Lemma2Result {
  bool inequality_holds = false;  // Z^2 + Z.K < 0
  Cycle fundamental_cycle;
  CycleNumbers numbers;
  /// -Z^2, reported only when p_a(Z) = 0 (Artin's rationality criterion).
  std::optional<std::int64_t> multiplicity;
};

/// Solves sum_j a_j (C_j . C_i) = C_i^2 + 2 - (D' . C_i) for every i.
/// Throws AnalysisRefusal when the intersection matrix is not negative definite.
DiscrepancyProfile discrepancies(const ResolutionGraph& graph);

PairClass classify_pair(const DiscrepancyProfile& profile);

/// Laufer's algorithm on the exceptional curves (boundary ignored; a
/// warning is appended to `warnings` when the graph carries boundary).
/// Throws AnalysisRefusal on a non-negative-definite graph.
Cycle fundamental_cycle(const ResolutionGraph& graph, std::vector<std::string>* warnings = nullptr);

CycleNumbers cycle_numbers(const ResolutionGraph& graph, const Cycle& z);

/// Checks Z^2 + Z.K < 0 for the D = 0 singularity underlying `graph`.
/// Throws AnalysisRefusal when that singularity is not log terminal.
Lemma2Result lemma2_check(const ResolutionGraph& graph);

}  // namespace surfsing
