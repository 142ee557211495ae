#include "surfsing/cover.hpp"

#include <algorithm>

#include "surfsing/classify.hpp"

namespace surfsing {
namespace {

void require_matching(const ResolutionGraph& graph, const std::vector<std::string>& ids, std::string_view what) {
  bool ok = ids.size() == graph.size();
  for (std::size_t i = 0; ok && i < ids.size(); ++i) ok = ids[i] == graph.id(i);
  if (!ok) throw ContractViolation(std::string(what) + " does not match the graph's vertices");
}

bool divides(std::int64_t p, const BigInt& r) { return mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }

unsigned valuation(BigInt r, std::int64_t p) {
  unsigned v = 0;
  while (r != 0 && divides(p, r)) {
    r /= BigInt(static_cast<long>(p));
    ++v;
  }
  return v;
}

}  // namespace

std::int64_t ResidueVector::at(std::string_view id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return residues[i];
  }
  throw ValidationError(std::string(id), "residue vector has no vertex '" + std::string(id) + "'");
}

std::string_view to_string(CaseKind k) {
  switch (k) {
    case CaseKind::Case1: return "Case1";
    case CaseKind::Case2: return "Case2";
    case CaseKind::FailEndPattern: return "FailEndPattern";
    case CaseKind::Unclassified: return "Unclassified";
  }
  return "?";
}

std::string_view to_string(CoverVerdict v) {
  switch (v) {
    case CoverVerdict::TameCanonical: return "TameCanonical";
    case CoverVerdict::StepLogTerminal: return "StepLogTerminal";
    case CoverVerdict::NotLogTerminal: return "NotLogTerminal";
    case CoverVerdict::TheoremOneCanonical: return "TheoremOneCanonical";
    case CoverVerdict::TypeARemarkCanonical: return "TypeARemarkCanonical";
    case CoverVerdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::TameCover: return "tame-cover";
    case Provenance::TheoremBacked: return "theorem-backed";
    case Provenance::TypeARemarkBacked: return "type-A-remark-backed";
  }
  return "?";
}

std::string_view to_string(CenterCase c) {
  switch (c) {
    case CenterCase::a: return "a";
    case CenterCase::b: return "b";
    case CenterCase::c: return "c";
  }
  return "?";
}

std::vector<std::string> CoverReport::failing_vertices() const {
  std::vector<std::string> out;
  for (const auto& row : components) {
    if (row.component.payload && *row.component.payload >= Rational(1)) out.push_back(row.id);
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(const BigInt& n, std::int64_t at_least) {
  if (n <= 0) throw ContractViolation("prime_divisors needs a positive integer");
  std::vector<std::int64_t> out;
  BigInt rest = n;
  for (std::int64_t d = 2; BigInt(static_cast<long>(d)) * d <= rest; ++d) {
    if (!divides(d, rest)) continue;
    if (d >= at_least) out.push_back(d);
    while (divides(d, rest)) rest /= BigInt(static_cast<long>(d));
  }
  if (rest > 1) {
    if (!rest.fits_slong_p()) throw ContractViolation("prime factor exceeds 64 bits");
    if (rest.get_si() >= at_least) out.push_back(rest.get_si());
  }
  return out;
}

ResidueVector residues_mod_p(const DiscrepancyProfile& profile, std::int64_t p) {
  if (!is_prime(p)) throw ContractViolation("characteristic " + std::to_string(p) + " is not prime");
  if (!divides(p, profile.index)) {
    throw TameCoverError("p = " + std::to_string(p) + " does not divide the index " + to_string(profile.index) +
                         "; the index 1 cover is tame (use cover_verdict)");
  }
  ResidueVector rv;
  rv.ids = profile.ids;
  rv.coefficients = profile.coefficients;
  rv.p = p;
  rv.r = profile.index;
  const BigInt bp(static_cast<long>(p));
  rv.residues.reserve(profile.size());
  BigInt m;
  BigInt residue;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const mpq_class& a = profile.coefficients[j].raw();
    if (!mpz_divisible_p(profile.index.get_mpz_t(), a.get_den_mpz_t())) {
      const Rational ra = Rational(profile.index) * profile.coefficients[j];
      throw InconsistencyError("r * a_" + profile.ids[j] + " = " + ra.str() + " is not an integer");
    }
    // m = -r a_j, exact.
    mpz_divexact(m.get_mpz_t(), profile.index.get_mpz_t(), a.get_den_mpz_t());
    mpz_mul(m.get_mpz_t(), m.get_mpz_t(), a.get_num_mpz_t());
    mpz_neg(m.get_mpz_t(), m.get_mpz_t());
    mpz_fdiv_r(residue.get_mpz_t(), m.get_mpz_t(), bp.get_mpz_t());
    rv.residues.push_back(residue.get_si());
  }
  return rv;
}

namespace {

ComponentCase classify_at(const ResolutionGraph& graph, const ResidueVector& rv, std::size_t j) {
  const Rational& a = rv.coefficients[j];
  const Rational p(rv.p);
  ComponentCase out;

  if (rv.residues[j] != 0) {
    // alpha vanishes to an order prime to p along C_j: the cover is
    // ramified there and d(alpha) drops the order by one.
    // p (a - 1 + 1/p) = p a - (p - 1).
    out.kind = CaseKind::Case1;
    out.payload = p * a - Rational(rv.p - 1);
    out.pullback_multiplicity = rv.p;
    return out;
  }

  const auto& nbrs = graph.neighbors(j);
  const auto zero_nbrs = std::count_if(nbrs.begin(), nbrs.end(), [&](std::size_t i) { return rv.residues[i] == 0; });

  if (nbrs.size() <= 2 && zero_nbrs == 0) {
    if (nbrs.size() == 1) {
      throw InconsistencyError("component " + graph.id(j) +
                               " has residue 0 and a single neighbour with nonzero residue; the congruences force "
                               "a second such neighbour");
    }
    out.kind = CaseKind::Case2;
    out.payload = a;
    out.pullback_multiplicity = 1;
    return out;
  }
  if (nbrs.size() == 1 && zero_nbrs == 1) {
    out.kind = CaseKind::FailEndPattern;
    out.payload = p * a;
    out.pullback_multiplicity = rv.p;
    out.partner = graph.id(nbrs.front());
    return out;
  }
  return out;
}

}  // namespace

ComponentCase classify_component(const ResolutionGraph& graph, const ResidueVector& rv, std::string_view id) {
  require_matching(graph, rv.ids, "residue vector");
  return classify_at(graph, rv, graph.require_index(id));
}

CoverReport cover_step(const ResolutionGraph& graph, const DiscrepancyProfile& profile, std::int64_t p) {
  require_matching(graph, profile.ids, "profile");
  if (std::any_of(graph.vertices().begin(), graph.vertices().end(), [](const Vertex& v) { return v.self_int > -2; })) {
    throw AnalysisRefusal("cover_step: the graph is not a minimal resolution (a curve has self-intersection -1)");
  }
  if (classify_pair(profile) == PairClass::NotLogTerminal) {
    throw AnalysisRefusal("cover_step: the pair is not log terminal");
  }
  const ResidueVector rv = residues_mod_p(profile, p);

  CoverReport report;
  report.p = p;
  report.index = profile.index;
  report.step_index_after = profile.index / BigInt(static_cast<long>(p));
  report.remaining_inseparable_steps = valuation(profile.index, p) - 1;

  static const Rational one(1);
  bool any_failure = false;
  bool all_classified = true;
  report.components.reserve(graph.size());
  for (std::size_t j = 0; j < graph.size(); ++j) {
    ComponentRow row{graph.id(j), rv.residues[j], classify_at(graph, rv, j)};
    const auto& c = row.component;
    if (c.payload && *c.payload >= one) any_failure = true;
    if (c.kind != CaseKind::Case1 && c.kind != CaseKind::Case2) all_classified = false;
    report.components.push_back(std::move(row));
  }
  report.boundary_reduced = all_classified;
  if (any_failure) {
    report.verdict = CoverVerdict::NotLogTerminal;
  } else if (all_classified) {
    report.verdict = CoverVerdict::StepLogTerminal;
  } else {
    // Unclassified components, or an end pattern whose lower bound stays below 1.
    report.verdict = CoverVerdict::Indeterminate;
  }
  return report;
}

CoverReport cover_verdict(const ResolutionGraph& graph, const DiscrepancyProfile& profile, std::int64_t p) {
  require_matching(graph, profile.ids, "profile");
  if (!is_prime(p)) throw ContractViolation("characteristic " + std::to_string(p) + " is not prime");
  if (classify_pair(profile) == PairClass::NotLogTerminal) {
    throw AnalysisRefusal("cover_verdict: the pair is not log terminal");
  }
  if (!divides(p, profile.index)) {
    if (std::any_of(graph.vertices().begin(), graph.vertices().end(), [](const Vertex& v) { return v.self_int > -2; })) {
      throw AnalysisRefusal("cover_verdict: the graph is not a minimal resolution");
    }
    CoverReport report;
    report.p = p;
    report.index = profile.index;
    report.step_index_after = profile.index;
    report.boundary_reduced = true;
    report.verdict = CoverVerdict::TameCanonical;
    report.provenance = Provenance::TameCover;
    return report;
  }

  CoverReport report = cover_step(graph, profile, p);
  if (report.verdict != CoverVerdict::StepLogTerminal) return report;
  if (p >= 5) {
    report.verdict = CoverVerdict::TheoremOneCanonical;
    report.provenance = Provenance::TheoremBacked;
  } else if (is_chain(graph)) {
    report.verdict = CoverVerdict::TypeARemarkCanonical;
    report.provenance = Provenance::TypeARemarkBacked;
  }
  return report;
}

CenterCase classify_center_case(const ResolutionGraph& graph, const ResidueVector& rv, const BlowUpCenter& center) {
  require_matching(graph, rv.ids, "residue vector");
  check_center(graph, center);
  auto residue = [&](const std::string& id) { return rv.residues[graph.require_index(id)]; };
  if (const auto* c = std::get_if<FreePoint>(&center)) {
    return residue(c->vertex) == 0 ? CenterCase::a : CenterCase::b;
  }
  if (const auto* c = std::get_if<EdgePoint>(&center)) {
    if (residue(c->first) == 0 && residue(c->second) == 0) {
      throw AnalysisRefusal("center " + to_string(center) +
                            ": both curves have residue 0, outside the a/b/c trichotomy");
    }
    return CenterCase::c;
  }
  const auto& b = std::get<BoundaryPoint>(center);
  if (!b.vertex) {
    throw AnalysisRefusal("center boundary:- lies off the exceptional locus, outside the a/b/c trichotomy");
  }
  // A boundary point lies on exactly one exceptional curve.
  return residue(*b.vertex) == 0 ? CenterCase::a : CenterCase::b;
}

}  // namespace surfsing
