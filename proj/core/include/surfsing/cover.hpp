#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfsing/blowup.hpp"
#include "surfsing/discrepancy.hpp"
#include "surfsing/error.hpp"
#include "surfsing/graph.hpp"

namespace surfsing {

/// Raised by residues_mod_p when p does not divide the index: the index 1
/// cover is then etale off the singular point and the tame verdict applies.
class TameCoverError : public AnalysisRefusal {
 public:
  using AnalysisRefusal::AnalysisRefusal;
};

/// Classes m_j mod p of the orders of alpha along C_j, determined by the
/// congruence m_j + r a_j == 0 (mod r). Keeps the profile it came from.
struct ResidueVector {
  std::vector<std::string> ids;
  std::vector<std::int64_t> residues;  // in [0, p)
  std::vector<Rational> coefficients;  // a_j of the source profile
  std::int64_t p = 0;
  BigInt r{1};

  std::int64_t at(std::string_view id) const;
};

enum class CaseKind { Case1, Case2, FailEndPattern, Unclassified };
std::string_view to_string(CaseKind k);

struct ComponentCase {
  CaseKind kind = CaseKind::Unclassified;
  /// Case1: p(a - 1 + 1/p). Case2: a. FailEndPattern: lower bound p*a.
  std::optional<Rational> payload;
  /// Multiplicity of C_j in its pull-back to the cover (p or 1), when known.
  std::optional<std::int64_t> pullback_multiplicity;
  /// FailEndPattern: the neighbour sharing residue 0.
  std::optional<std::string> partner;

  bool is_lower_bound() const { return kind == CaseKind::FailEndPattern; }
};

enum class CoverVerdict {
  TameCanonical,
  StepLogTerminal,
  NotLogTerminal,
  TheoremOneCanonical,
  TypeARemarkCanonical,
  Indeterminate,
};
std::string_view to_string(CoverVerdict v);

/// Where a verdict comes from: recomputed here, or licensed by a theorem
/// for the tower steps that are not recomputed.
enum class Provenance { Computed, TameCover, TheoremBacked, TypeARemarkBacked };
std::string_view to_string(Provenance p);

struct ComponentRow {
  std::string id;
  std::int64_t residue = 0;
  ComponentCase component;
};

struct CoverReport {
  std::int64_t p = 0;
  BigInt index{1};
  std::vector<ComponentRow> components;  // empty for the tame cover
  BigInt step_index_after{1};            // r / p
  bool boundary_reduced = false;
  CoverVerdict verdict = CoverVerdict::Indeterminate;
  Provenance provenance = Provenance::Computed;
  /// Further degree-p steps still needed after this one (v_p(r) - 1).
  unsigned remaining_inseparable_steps = 0;

  /// Vertices whose transformed coefficient (or lower bound) reaches 1.
  std::vector<std::string> failing_vertices() const;
};

bool is_prime(std::int64_t n);

/// Distinct primes >= `at_least` dividing n (n > 0), ascending.
std::vector<std::int64_t> prime_divisors(const BigInt& n, std::int64_t at_least = 2);

/// Throws TameCoverError when p does not divide the index.
ResidueVector residues_mod_p(const DiscrepancyProfile& profile, std::int64_t p);

/// Case split for one exceptional component; see CaseKind.
ComponentCase classify_component(const ResolutionGraph& graph, const ResidueVector& rv, std::string_view id);

/// One degree-p step of the index 1 cover on a minimal log terminal graph.
CoverReport cover_step(const ResolutionGraph& graph, const DiscrepancyProfile& profile, std::int64_t p);

/// Full verdict for the index 1 cover in characteristic p.
CoverReport cover_verdict(const ResolutionGraph& graph, const DiscrepancyProfile& profile, std::int64_t p);

/// Position of a blow-up center relative to the residues:
/// a = on one curve with p | m, b = on one curve with p not dividing m,
/// c = on two curves, one of them with p not dividing m.
enum class CenterCase { a, b, c };
std::string_view to_string(CenterCase c);

CenterCase classify_center_case(const ResolutionGraph& graph, const ResidueVector& rv, const BlowUpCenter& center);

}  // namespace surfsing
