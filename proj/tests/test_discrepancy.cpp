#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "surfsing/classify.hpp"
#include "surfsing/discrepancy.hpp"
#include "surfsing/document.hpp"
#include "surfsing/error.hpp"

using namespace surfsing;

namespace {

const ResolutionGraph& corpus(std::string_view name) {
  static std::vector<GraphDocument> cache = builtin_corpus();
  for (const auto& d : cache)
    if (d.name == name) return d.graph;
  throw std::runtime_error("missing corpus graph");
}

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(Rational::parse(x));
  return out;
}

ResolutionGraph permuted(const ResolutionGraph& g, const std::vector<std::size_t>& perm) {
  // New position k holds old vertex perm[k].
  std::vector<std::size_t> where(g.size());
  std::vector<Vertex> vs;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    where[perm[k]] = k;
    vs.push_back(g.vertex(perm[k]));
  }
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (const auto& [i, j] : g.edges()) es.emplace_back(where[i], where[j]);
  std::vector<int> b(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) b[where[i]] = g.boundary(i);
  return ResolutionGraph::from_indices(std::move(vs), es, std::move(b));
}

}  // namespace

TEST_CASE("discrepancies: A_n chains are canonical with index 1") {
  for (int n = 1; n <= 8; ++n) {
    const auto p = discrepancies(corpus("A" + std::to_string(n)));
    for (const auto& a : p.coefficients) CHECK(a == Rational(0));
    CHECK(p.index == 1);
    CHECK(classify_pair(p) == PairClass::Canonical);
  }
}

TEST_CASE("discrepancies: example5-1") {
  const auto p = discrepancies(corpus("example5-1"));
  CHECK(p.coefficients == rationals({"1/2", "1/4", "1/4", "1/2"}));
  CHECK(p.index == 4);
  CHECK(classify_pair(p) == PairClass::LogTerminalNotCanonical);
  CHECK_FALSE(p.numerical_index_only);
}

TEST_CASE("discrepancies: example5-2") {
  const auto p = discrepancies(corpus("example5-2"));
  CHECK(p.coefficients == rationals({"2/3", "1/3", "4/9", "2/9", "5/9"}));
  CHECK(p.index == 9);
}

TEST_CASE("discrepancies: single -5 curve") {
  const auto p = discrepancies(corpus("single-5"));
  CHECK(p.coefficients == rationals({"3/5"}));
  CHECK(p.index == 5);
}

TEST_CASE("discrepancies refuse non-negative-definite graphs") {
  // Extended D_4: a -2 hub with four -2 leaves.
  const ResolutionGraph d4tilde({{"H", -2}, {"L1", -2}, {"L2", -2}, {"L3", -2}, {"L4", -2}},
                                {{"H", "L1"}, {"H", "L2"}, {"H", "L3"}, {"H", "L4"}});
  CHECK_THROWS_AS(discrepancies(d4tilde), AnalysisRefusal);
  CHECK_THROWS_AS(fundamental_cycle(d4tilde), AnalysisRefusal);
}

TEST_CASE("discrepancies agree with Cramer's rule and satisfy every linear condition") {
  int seen = 0;
  enumerate_graphs(5, -4, [&](const ResolutionGraph& g) {
    const auto p = discrepancies(g);
    CHECK(p.coefficients == oracle::solve_cramer(oracle::dense(g), oracle::discrepancy_rhs(g)));
    ++seen;
    return true;
  });
  CHECK(seen > 100);
}

TEST_CASE("discrepancies with boundary") {
  // (S, D) smooth with D a smooth curve through the point: blowing up gives
  // a (-1)-curve met once by D', coefficient 0.
  const ResolutionGraph g({{"E", -1}}, {}, {{"E", 1}});
  const auto p = discrepancies(g);
  CHECK(p.coefficients == rationals({"0"}));
  // A_1 with a boundary curve through it: a = 1/2.
  const ResolutionGraph h({{"C", -2}}, {}, {{"C", 1}});
  CHECK(discrepancies(h).coefficients == rationals({"1/2"}));
}

TEST_CASE("classify_pair thresholds") {
  CHECK(classify_pair(make_profile({"x"}, {Rational(0)})) == PairClass::Canonical);
  CHECK(classify_pair(make_profile({"x"}, {Rational(-1)})) == PairClass::Canonical);
  CHECK(classify_pair(make_profile({"x"}, {Rational(1)})) == PairClass::NotLogTerminal);
  CHECK(classify_pair(make_profile({"x", "y"}, {Rational::parse("99/100"), Rational(0)})) ==
        PairClass::LogTerminalNotCanonical);
  CHECK(make_profile({"x"}, {Rational(1)}).numerical_index_only);
}

TEST_CASE("index is the least common denominator") {
  enumerate_graphs(5, -5, [&](const ResolutionGraph& g) {
    const auto p = discrepancies(g);
    for (const auto& a : p.coefficients) CHECK((Rational(p.index) * a).is_integer());
    // No proper divisor works.
    for (long d = 1; BigInt(d) < p.index; ++d) {
      if (!mpz_divisible_ui_p(p.index.get_mpz_t(), static_cast<unsigned long>(d))) continue;
      bool all_integral = true;
      for (const auto& a : p.coefficients) all_integral = all_integral && (Rational(d) * a).is_integer();
      CHECK_FALSE(all_integral);
    }
    return true;
  });
}

TEST_CASE("fundamental cycle examples") {
  const ResolutionGraph single({{"C", -7}}, {});
  CHECK(fundamental_cycle(single).multiplicities == std::vector<std::int64_t>{1});
  CHECK(cycle_numbers(single, fundamental_cycle(single)).z_squared == -7);

  const auto z1 = fundamental_cycle(corpus("example5-1"));
  CHECK(z1.multiplicities == std::vector<std::int64_t>{2, 1, 1, 1});
  const auto n1 = cycle_numbers(corpus("example5-1"), z1);
  CHECK(n1.z_squared == -3);
  CHECK(n1.z_dot_k == 1);
  CHECK(n1.arithmetic_genus == Rational(0));

  // The Laufer cycle of example5-2 has -Z^2 = 3, confirmed by search.
  const auto z2 = fundamental_cycle(corpus("example5-2"));
  CHECK(z2.multiplicities == std::vector<std::int64_t>{2, 1, 2, 1, 1});
  const auto brute = oracle::brute_force_fundamental_cycle(corpus("example5-2"), 4);
  REQUIRE(brute);
  CHECK(*brute == z2.multiplicities);
  const auto n2 = cycle_numbers(corpus("example5-2"), z2);
  CHECK(n2.z_squared == -3);
  CHECK(n2.arithmetic_genus == Rational(0));
}

TEST_CASE("fundamental cycle warns about boundary but still computes") {
  const ResolutionGraph g({{"C", -2}}, {}, {{"C", 1}});
  std::vector<std::string> warnings;
  CHECK(fundamental_cycle(g, &warnings).multiplicities == std::vector<std::int64_t>{1});
  CHECK(warnings.size() == 1);
}

TEST_CASE("Laufer matches exhaustive search on small trees") {
  int checked = 0;
  enumerate_graphs(5, -3, [&](const ResolutionGraph& g) {
    const auto brute = oracle::brute_force_fundamental_cycle(g, 4);
    if (brute) {
      CHECK(fundamental_cycle(g).multiplicities == *brute);
      ++checked;
    }
    return true;
  });
  CHECK(checked > 30);
}

TEST_CASE("fundamental cycle does not depend on vertex order") {
  std::mt19937 rng(5);
  const auto graphs = collect_graphs(6, -4);
  for (std::size_t k = 0; k < graphs.size(); k += 7) {
    const auto& g = graphs[k];
    const auto z = fundamental_cycle(g);
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto zp = fundamental_cycle(permuted(g, perm));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(zp.at(g.id(i)) == z.multiplicities[i]);
  }
}

TEST_CASE("cycle_numbers on single curves") {
  const ResolutionGraph m2({{"C", -2}}, {});
  const auto a = cycle_numbers(m2, fundamental_cycle(m2));
  CHECK(a.z_squared == -2);
  CHECK(a.z_dot_k == 0);
  CHECK(a.arithmetic_genus == Rational(0));
  const ResolutionGraph m3({{"C", -3}}, {});
  const auto b = cycle_numbers(m3, fundamental_cycle(m3));
  CHECK(b.z_squared == -3);
  CHECK(b.z_dot_k == 1);
  CHECK(b.arithmetic_genus == Rational(0));
}

TEST_CASE("lemma2_check") {
  const auto a2 = lemma2_check(corpus("A2"));
  CHECK(a2.inequality_holds);
  CHECK(a2.multiplicity == 2);
  const auto e51 = lemma2_check(corpus("example5-1"));
  CHECK(e51.inequality_holds);
  CHECK(e51.multiplicity == 3);
  const auto a1 = lemma2_check(corpus("A1"));
  CHECK(a1.inequality_holds);
  CHECK(a1.multiplicity == 2);

  // Star with three -3 leaves around a -2 hub: negative definite, not log terminal.
  const ResolutionGraph star({{"H", -2}, {"L1", -3}, {"L2", -3}, {"L3", -3}}, {{"H", "L1"}, {"H", "L2"}, {"H", "L3"}});
  CHECK(classify_pair(discrepancies(star)) == PairClass::NotLogTerminal);
  CHECK_THROWS_AS(lemma2_check(star), AnalysisRefusal);
}

TEST_CASE("D-type fork relation a1 = a2 = a0/2") {
  int forks = 0;
  enumerate_graphs(7, -5, [&](const ResolutionGraph& g) {
    const auto p = discrepancies(g);
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (g.degree(c) != 3) continue;
      std::vector<std::size_t> leaves;
      for (auto n : g.neighbors(c))
        if (g.degree(n) == 1 && g.self_int(n) == -2) leaves.push_back(n);
      for (std::size_t x = 0; x < leaves.size(); ++x)
        for (std::size_t y = x + 1; y < leaves.size(); ++y) {
          ++forks;
          CHECK(p.coefficients[leaves[x]] == p.coefficients[c] / Rational(2));
          CHECK(p.coefficients[leaves[y]] == p.coefficients[c] / Rational(2));
        }
    }
    return true;
  });
  CHECK(forks > 100);
}
