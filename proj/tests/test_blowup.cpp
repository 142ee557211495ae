#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "surfsing/blowup.hpp"
#include "surfsing/document.hpp"
#include "surfsing/error.hpp"

using namespace surfsing;

namespace {

ResolutionGraph corpus(std::string_view name) { return find_builtin(name)->graph; }

std::vector<BlowUpCenter> valid_centers(const ResolutionGraph& g) {
  std::vector<BlowUpCenter> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(FreePoint{g.id(i)});
    if (g.boundary(i) > 0) out.push_back(BoundaryPoint{g.id(i)});
  }
  for (const auto& [i, j] : g.edges()) out.push_back(EdgePoint{g.id(i), g.id(j)});
  out.push_back(BoundaryPoint{std::nullopt});
  return out;
}

}  // namespace

TEST_CASE("center spec grammar") {
  CHECK(to_string(parse_center("free:C1")) == "free:C1");
  CHECK(to_string(parse_center("edge:C1,C2")) == "edge:C1,C2");
  CHECK(to_string(parse_center("boundary:C3")) == "boundary:C3");
  CHECK(std::holds_alternative<BoundaryPoint>(parse_center("boundary:-")));
  CHECK_FALSE(std::get<BoundaryPoint>(parse_center("boundary:-")).vertex);
  CHECK_THROWS_AS(parse_center("C1"), ParseError);
  CHECK_THROWS_AS(parse_center("edge:C1"), ParseError);
  CHECK_THROWS_AS(parse_center("point:C1"), ParseError);
}

TEST_CASE("invalid centers are rejected by name") {
  const auto g = corpus("example5-1");
  const auto p = discrepancies(g);
  CHECK_THROWS_AS(blow_up(g, p, EdgePoint{"C2", "C3"}), ValidationError);
  CHECK_THROWS_AS(blow_up(g, p, FreePoint{"C9"}), ValidationError);
  try {
    blow_up(g, p, BoundaryPoint{"C1"});
    FAIL("expected a center error");
  } catch (const ValidationError& e) {
    CHECK(e.element() == "boundary:C1");
  }
}

TEST_CASE("edge point on A_2") {
  const auto g = corpus("A2");
  const auto r = blow_up(g, discrepancies(g), EdgePoint{"C1", "C2"});
  CHECK(r.graph.self_int(r.graph.require_index("C1")) == -3);
  CHECK(r.graph.self_int(r.graph.require_index("C2")) == -3);
  CHECK(r.graph.self_int(r.graph.require_index(r.new_vertex)) == -1);
  CHECK_FALSE(r.graph.has_edge(0, 1));
  CHECK(r.profile.at("C1") == Rational(0));
  CHECK(r.profile.at("C2") == Rational(0));
  CHECK(r.profile.at(r.new_vertex) == Rational(-1));
  // Independent re-solve of the 3x3 system.
  CHECK(oracle::solve_cramer(oracle::dense(r.graph), oracle::discrepancy_rhs(r.graph)) == r.profile.coefficients);
  CHECK(verify_transport(g, EdgePoint{"C1", "C2"}));
}

TEST_CASE("free point on a single -2 curve") {
  const auto g = corpus("A1");
  const auto r = blow_up(g, discrepancies(g), FreePoint{"C1"});
  CHECK(r.graph.self_int(0) == -3);
  CHECK(r.graph.self_int(1) == -1);
  CHECK(r.profile.coefficients == std::vector<Rational>{Rational(0), Rational(-1)});
  CHECK(oracle::solve_cramer(oracle::dense(r.graph), oracle::discrepancy_rhs(r.graph)) == r.profile.coefficients);
}

TEST_CASE("free point on C4 of example5-1") {
  const auto g = corpus("example5-1");
  const auto r = blow_up(g, discrepancies(g), FreePoint{"C4"});
  CHECK(r.profile.at(r.new_vertex) == Rational::parse("-1/2"));
  CHECK(oracle::solve_cramer(oracle::dense(r.graph), oracle::discrepancy_rhs(r.graph)) == r.profile.coefficients);
  CHECK(verify_transport(g, FreePoint{"C4"}));
}

TEST_CASE("free point on C5 of example5-2") {
  const auto g = corpus("example5-2");
  CHECK(verify_transport(g, FreePoint{"C5"}));
  const auto r = blow_up(g, discrepancies(g), FreePoint{"C5"});
  CHECK(r.profile.at(r.new_vertex) == Rational::parse("-4/9"));
}

TEST_CASE("boundary points") {
  const auto g = corpus("A1");
  const auto off = blow_up(g, discrepancies(g), BoundaryPoint{std::nullopt});
  CHECK(off.graph.size() == 2);
  CHECK(off.graph.boundary(1) == 1);
  CHECK(off.profile.at(off.new_vertex) == Rational(0));
  CHECK(verify_transport(g, BoundaryPoint{std::nullopt}));

  const ResolutionGraph h({{"C", -2}}, {}, {{"C", 1}});
  const auto r = blow_up(h, discrepancies(h), BoundaryPoint{"C"});
  CHECK(r.graph.boundary(0) == 0);
  CHECK(r.graph.boundary(1) == 1);
  CHECK(r.graph.self_int(0) == -3);
  CHECK(r.profile.at(r.new_vertex) == Rational::parse("1/2"));
  CHECK(verify_transport(h, BoundaryPoint{"C"}));
}

TEST_CASE("transport matches a direct solve for every center of every corpus graph") {
  for (const auto& doc : builtin_corpus()) {
    for (const auto& c : valid_centers(doc.graph)) {
      CHECK_MESSAGE(verify_transport(doc.graph, c), doc.name << " " << to_string(c));
    }
  }
}

TEST_CASE("random blow-up sequences keep transport exact and coefficients below 1") {
  std::mt19937 rng(2024);
  const auto& corpus_docs = builtin_corpus();
  for (int trial = 0; trial < 300; ++trial) {
    ResolutionGraph g = corpus_docs[trial % corpus_docs.size()].graph;
    DiscrepancyProfile p = discrepancies(g);
    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      const auto centers = valid_centers(g);
      const auto& c = centers[rng() % centers.size()];
      auto r = blow_up(g, p, c);
      CHECK(r.profile == discrepancies(r.graph));
      CHECK(is_negative_definite(intersection_matrix(r.graph)));
      CHECK(r.profile.max_coefficient() < Rational(1));
      g = std::move(r.graph);
      p = std::move(r.profile);
    }
  }
}
