#include "oracle.hpp"

#include <functional>

namespace oracle {

Dense dense(const surfsing::ResolutionGraph& g) {
  Dense m(g.size(), std::vector<std::int64_t>(g.size(), 0));
  for (std::size_t i = 0; i < g.size(); ++i) m[i][i] = g.self_int(i);
  for (const auto& [i, j] : g.edges()) m[i][j] = m[j][i] = 1;
  return m;
}

std::int64_t det_cofactor(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][c] * det_cofactor(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

bool negative_definite_by_minors(const Dense& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Dense lead(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    const std::int64_t d = det_cofactor(lead);
    if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) return false;
  }
  return true;
}

std::vector<surfsing::Rational> solve_cramer(const Dense& m, const std::vector<std::int64_t>& rhs) {
  const std::int64_t d = det_cofactor(m);
  std::vector<surfsing::Rational> x;
  for (std::size_t c = 0; c < m.size(); ++c) {
    Dense mc = m;
    for (std::size_t r = 0; r < m.size(); ++r) mc[r][c] = rhs[r];
    x.push_back(surfsing::Rational(det_cofactor(mc)) / surfsing::Rational(d));
  }
  return x;
}

std::vector<std::int64_t> discrepancy_rhs(const surfsing::ResolutionGraph& g) {
  std::vector<std::int64_t> rhs;
  for (std::size_t i = 0; i < g.size(); ++i) rhs.push_back(g.self_int(i) + 2 - g.boundary(i));
  return rhs;
}

std::optional<std::vector<std::int64_t>> brute_force_fundamental_cycle(const surfsing::ResolutionGraph& g,
                                                                       int max_mult) {
  const Dense m = dense(g);
  const std::size_t n = g.size();
  std::vector<std::vector<std::int64_t>> admissible;
  std::vector<std::int64_t> z(n, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += m[i][j] * z[j];
        if (dot > 0) return;
      }
      admissible.push_back(z);
      return;
    }
    for (int v = 1; v <= max_mult; ++v) {
      z[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  for (const auto& cand : admissible) {
    bool least = true;
    for (const auto& other : admissible) {
      for (std::size_t i = 0; i < n && least; ++i) least = cand[i] <= other[i];
      if (!least) break;
    }
    if (least) return cand;
  }
  return std::nullopt;
}

bool finds_nonnegative_vector(const Dense& m, int bound) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> x(n, -bound);
  for (;;) {
    bool nonzero = false;
    for (auto v : x) nonzero = nonzero || v != 0;
    if (nonzero) {
      std::int64_t q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += x[i] * m[i][j] * x[j];
      if (q >= 0) return true;
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) return false;
    ++x[k];
  }
}

}  // namespace oracle
