#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "surfsing/rational.hpp"

namespace surfsing {

/// Dense square matrix of machine integers (intersection numbers are small;
/// every computation on it is carried out exactly in unbounded arithmetic).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant.
BigInt determinant(const IntMatrix& m);

/// det of the leading k x k block for k = 1..n.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

/// True iff (-1)^k * (leading k x k minor) > 0 for every k (Sylvester).
/// Throws ContractViolation on a non-symmetric matrix.
bool is_negative_definite(const IntMatrix& m);

/// Exact solution of m x = rhs, checked by substitution before it is
/// returned. Throws SingularMatrixError when det(m) = 0.
std::vector<Rational> solve_linear_system(const IntMatrix& m, std::span<const Rational> rhs);
std::vector<Rational> solve_linear_system(const IntMatrix& m, std::span<const std::int64_t> rhs);

/// Solves m x = rhs when m is symmetric negative definite, nullopt otherwise.
/// One elimination pass serves as both the definiteness test and the solve.
std::optional<std::vector<Rational>> solve_negative_definite(const IntMatrix& m, std::span<const std::int64_t> rhs);

}  // namespace surfsing
