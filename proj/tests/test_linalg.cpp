#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "surfsing/error.hpp"
#include "surfsing/linalg.hpp"

using namespace surfsing;

namespace {

IntMatrix to_matrix(const oracle::Dense& d) {
  IntMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) m(i, j) = d[i][j];
  return m;
}

// -A^T A - I: negative definite by construction.
oracle::Dense random_negative_definite(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  oracle::Dense a(n, std::vector<std::int64_t>(n));
  for (auto& row : a)
    for (auto& v : row) v = entry(rng);
  oracle::Dense m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m[i][j] -= a[k][i] * a[k][j];
      if (i == j) m[i][j] -= 1;
    }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(BigInt(6), BigInt(-8)).str() == "-3/4");
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK(Rational(1) / Rational(3) + Rational(2) / Rational(3) == Rational(1));

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> big(-1'000'000'000L, 1'000'000'000L);
  for (int t = 0; t < 500; ++t) {
    const Rational a(BigInt(big(rng)), BigInt(std::abs(big(rng)) + 1));
    Rational b(BigInt(big(rng)), BigInt(std::abs(big(rng)) + 1));
    CHECK((a + b) - b == a);
    if (b.sign() != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("is_negative_definite on small cases") {
  CHECK(is_negative_definite(IntMatrix{{-1}}));
  CHECK_FALSE(is_negative_definite(IntMatrix{{0}}));
  CHECK(is_negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
  CHECK(leading_principal_minors(IntMatrix{{-2, 1}, {1, -2}}) == std::vector<BigInt>{-2, 3});
  CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 1}, {1, -1}}));
  CHECK_THROWS_AS(is_negative_definite(IntMatrix{{-2, 1}, {0, -2}}), ContractViolation);
  CHECK(is_negative_definite(IntMatrix{}));
}

TEST_CASE("leading minors continue past a zero pivot") {
  const IntMatrix m{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}};
  CHECK(leading_principal_minors(m) == std::vector<BigInt>{0, -1, -5});
  CHECK(determinant(m) == -5);
}

TEST_CASE("solve_linear_system examples") {
  const std::vector<Rational> zero{Rational(0)};
  CHECK(solve_linear_system(IntMatrix{{-2}}, zero) == zero);

  const std::vector<Rational> three{Rational(-3)};
  CHECK(solve_linear_system(IntMatrix{{-5}}, three) == std::vector<Rational>{Rational(BigInt(3), BigInt(5))});

  const IntMatrix ex51{{-2, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -3}};
  const std::vector<Rational> rhs{0, 0, 0, -1};
  const std::vector<Rational> expected{Rational::parse("1/2"), Rational::parse("1/4"), Rational::parse("1/4"),
                                       Rational::parse("1/2")};
  CHECK(solve_linear_system(ex51, rhs) == expected);

  const std::vector<Rational> two{Rational(1), Rational(1)};
  CHECK_THROWS_AS(solve_linear_system(IntMatrix{{1, 1}, {1, 1}}, two), SingularMatrixError);
  CHECK_THROWS_AS(solve_linear_system(IntMatrix{{1, 1}, {1, 1}}, std::vector<Rational>{1}), ContractViolation);
}

TEST_CASE("solve with rational right-hand side back-substitutes exactly") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto d = random_negative_definite(rng, n);
    const IntMatrix m = to_matrix(d);
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < n; ++i) rhs.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    const auto x = solve_linear_system(m, rhs);
    for (std::size_t i = 0; i < n; ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += Rational(m(i, j)) * x[j];
      CHECK(row == rhs[i]);
    }
  }
}

TEST_CASE("large entries fall back to unbounded arithmetic") {
  // A -10^6 weighted chain of length 8: minors overflow int64 in Bareiss.
  const std::size_t n = 8;
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -1'000'000;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  CHECK(is_negative_definite(m));
  std::vector<Rational> rhs(n, Rational(1));
  const auto x = solve_linear_system(m, rhs);
  for (std::size_t i = 0; i < n; ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < n; ++j) row += Rational(m(i, j)) * x[j];
    CHECK(row == Rational(1));
  }
  CHECK(sgn(determinant(m)) == 1);
}

TEST_CASE("negative definiteness agrees with the quadratic-form oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> diag(-4, 0);
  std::uniform_int_distribution<int> off(0, 1);
  int definite = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    oracle::Dense d(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      d[i][i] = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = off(rng);
    }
    const bool nd = is_negative_definite(to_matrix(d));
    CHECK(nd == oracle::negative_definite_by_minors(d));
    // Any x with x^T M x >= 0 refutes definiteness.
    if (nd) {
      ++definite;
      CHECK_FALSE(oracle::finds_nonnegative_vector(d, 3));
    }
  }
  CHECK(definite > 20);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_negative_definite(rng, 1 + trial % 5);
    CHECK(is_negative_definite(to_matrix(d)));
    CHECK_FALSE(oracle::finds_nonnegative_vector(d, 3));
  }
}

TEST_CASE("combined definiteness test and solve") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> diag(-4, 0);
  std::uniform_int_distribution<int> off(0, 1);
  std::uniform_int_distribution<int> rhs_entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    oracle::Dense d(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      d[i][i] = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = off(rng);
    }
    std::vector<std::int64_t> rhs(n);
    for (auto& v : rhs) v = rhs_entry(rng);
    const auto x = solve_negative_definite(to_matrix(d), rhs);
    REQUIRE(x.has_value() == oracle::negative_definite_by_minors(d));
    if (x) CHECK(*x == oracle::solve_cramer(d, rhs));
  }
  const std::vector<std::int64_t> one{1, 1};
  CHECK_THROWS_AS(solve_negative_definite(IntMatrix{{-2, 1}, {0, -2}}, one), ContractViolation);
  CHECK_FALSE(solve_negative_definite(IntMatrix{{2, 0}, {0, 2}}, one).has_value());
}
