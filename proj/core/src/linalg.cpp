#include "surfsing/linalg.hpp"

#include <optional>
#include <utility>

#include "surfsing/error.hpp"

namespace surfsing {
namespace {

struct Overflow {};

// Integer kernels run first on int64 with overflow checks and are replayed
// on BigInt when a check trips. Both instantiations compute the same exact
// values; the fast path only matters for bulk enumeration.
struct CheckedI64 {
  using Int = std::int64_t;
  static Int from(std::int64_t v) { return v; }
  static Int mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static Int sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static Int add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static Int neg(Int a) { return sub(0, a); }
  static Int div_exact(Int a, Int b) { return a / b; }
  static bool is_zero(Int a) { return a == 0; }
  static int sign(Int a) { return (a > 0) - (a < 0); }
  static BigInt big(Int a) { return BigInt(static_cast<long>(a)); }
};

struct Unbounded {
  using Int = BigInt;
  static Int from(std::int64_t v) { return BigInt(static_cast<long>(v)); }
  static Int from(const BigInt& v) { return v; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int neg(const Int& a) { return -a; }
  static Int div_exact(const Int& a, const Int& b) {
    Int out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
  static bool is_zero(const Int& a) { return a == 0; }
  static int sign(const Int& a) { return sgn(a); }
  static BigInt big(const Int& a) { return a; }
};

template <class Fn>
auto with_fast_path(Fn&& fn) {
  try {
    return fn(CheckedI64{});
  } catch (const Overflow&) {
    return fn(Unbounded{});
  }
}

// Per-thread scratch storage reused across calls; no caller holds two at once.
template <class A>
std::vector<typename A::Int>& load(const IntMatrix& m, std::size_t cols) {
  thread_local std::vector<typename A::Int> a;
  const std::size_t n = m.size();
  a.assign(n * cols, A::from(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = A::from(m(i, j));
  return a;
}

// One Bareiss step on rows/cols > k of an n x cols row-major array.
template <class A>
void bareiss_step(std::vector<typename A::Int>& a, std::size_t n, std::size_t cols, std::size_t k,
                  const typename A::Int& prev) {
  const auto pivot = a[k * cols + k];
  for (std::size_t i = k + 1; i < n; ++i) {
    const auto lead = a[i * cols + k];
    for (std::size_t j = k + 1; j < cols; ++j) {
      a[i * cols + j] =
          A::div_exact(A::sub(A::mul(pivot, a[i * cols + j]), A::mul(lead, a[k * cols + j])), prev);
    }
    a[i * cols + k] = A::from(0);
  }
}

template <class A>
BigInt determinant_impl(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  auto& a = load<A>(m, n);
  typename A::Int prev = A::from(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (A::is_zero(a[k * n + k])) {
      std::size_t r = k + 1;
      while (r < n && A::is_zero(a[r * n + k])) ++r;
      if (r == n) return BigInt(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      negate = !negate;
    }
    if (k + 1 < n) bareiss_step<A>(a, n, n, k, prev);
    prev = a[k * n + k];
  }
  BigInt det = A::big(a[(n - 1) * n + (n - 1)]);
  return negate ? BigInt(-det) : det;
}

// Leading minors from an unpivoted Bareiss sweep; stops at the first zero.
template <class A>
std::vector<BigInt> leading_minors_prefix(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto& a = load<A>(m, n);
  std::vector<BigInt> out;
  out.reserve(n);
  typename A::Int prev = A::from(1);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(A::big(a[k * n + k]));
    if (A::is_zero(a[k * n + k])) break;
    if (k + 1 < n) bareiss_step<A>(a, n, n, k, prev);
    prev = a[k * n + k];
  }
  return out;
}

template <class A>
bool negative_definite_impl(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto& a = load<A>(m, n);
  typename A::Int prev = A::from(1);
  for (std::size_t k = 0; k < n; ++k) {
    // The k-th unpivoted Bareiss pivot is the (k+1)-th leading minor.
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (A::sign(a[k * n + k]) != expected) return false;
    if (k + 1 < n) bareiss_step<A>(a, n, n, k, prev);
    prev = a[k * n + k];
  }
  return true;
}

template <class Int>
struct IntegerSolution {
  Int det;
  std::vector<Int> scaled;  // det * x
};

template <class A>
typename A::Int rhs_entry(const BigInt& v) {
  if constexpr (std::is_same_v<typename A::Int, std::int64_t>) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  } else {
    return v;
  }
}

template <class A>
typename A::Int rhs_entry(std::int64_t v) {
  return A::from(v);
}

// Solves m y = det(m) * b for integral b; y is integral (Cramer numerators).
// With `negative_definite_only`, returns nullopt unless every unpivoted
// pivot has the sign of a negative definite leading minor.
template <class A, class B>
std::optional<IntegerSolution<typename A::Int>> solve_impl(const IntMatrix& m, const std::vector<B>& b,
                                                           bool negative_definite_only = false) {
  using Int = typename A::Int;
  const std::size_t n = m.size();
  const std::size_t cols = n + 1;
  auto& a = load<A>(m, cols);
  for (std::size_t i = 0; i < n; ++i) a[i * cols + n] = rhs_entry<A>(b[i]);
  Int prev = A::from(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (negative_definite_only && A::sign(a[k * cols + k]) != ((k % 2 == 0) ? -1 : 1)) return std::nullopt;
    if (A::is_zero(a[k * cols + k])) {
      std::size_t r = k + 1;
      while (r < n && A::is_zero(a[r * cols + k])) ++r;
      if (r == n) return std::nullopt;
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[k * cols + j], a[r * cols + j]);
      negate = !negate;
    }
    bareiss_step<A>(a, n, cols, k, prev);
    prev = a[k * cols + k];
  }
  // After the sweep the last pivot is +-det; rows are fraction-free.
  Int det = a[(n - 1) * cols + (n - 1)];
  if (negate) det = A::neg(det);
  std::vector<Int> y(n, A::from(0));
  for (std::size_t ii = n; ii-- > 0;) {
    // Row ii of the echelon form equals (pivot_ii / prev) times a row
    // combination of the original system, so scaling by det keeps y exact.
    Int acc = A::mul(det, a[ii * cols + n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc = A::sub(acc, A::mul(a[ii * cols + j], y[j]));
    y[ii] = A::div_exact(acc, a[ii * cols + ii]);
  }
  // Substitution check: m y == det b, exactly.
  for (std::size_t i = 0; i < n; ++i) {
    Int lhs = A::from(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) lhs = A::add(lhs, A::mul(A::from(m(i, j)), y[j]));
    }
    if (lhs != A::mul(det, rhs_entry<A>(b[i]))) {
      throw InconsistencyError("linear solve failed substitution check in row " + std::to_string(i));
    }
  }
  return IntegerSolution<Int>{std::move(det), std::move(y)};
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw ContractViolation("IntMatrix rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

BigInt determinant(const IntMatrix& m) {
  return with_fast_path([&](auto arith) { return determinant_impl<decltype(arith)>(m); });
}

std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
  auto out = with_fast_path([&](auto arith) { return leading_minors_prefix<decltype(arith)>(m); });
  // A zero pivot stops the unpivoted sweep; finish the remaining blocks directly.
  for (std::size_t k = out.size(); k < m.size(); ++k) {
    IntMatrix block(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) block(i, j) = m(i, j);
    out.push_back(determinant(block));
  }
  return out;
}

bool is_negative_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) throw ContractViolation("is_negative_definite requires a symmetric matrix");
  return with_fast_path([&](auto arith) { return negative_definite_impl<decltype(arith)>(m); });
}

namespace {

void check_rhs_size(const IntMatrix& m, std::size_t rhs_size) {
  if (rhs_size != m.size()) {
    throw ContractViolation("solve_linear_system: rhs has " + std::to_string(rhs_size) + " entries for a " +
                            std::to_string(m.size()) + "x" + std::to_string(m.size()) + " matrix");
  }
}

// x = y / (det * scale) where m y = det b and b = scale * rhs.
template <class B>
std::optional<std::vector<Rational>> try_solve_scaled(const IntMatrix& m, const std::vector<B>& b, const BigInt& scale,
                                                      bool negative_definite_only) {
  return with_fast_path([&](auto arith) -> std::optional<std::vector<Rational>> {
    using A = decltype(arith);
    auto sol = solve_impl<A>(m, b, negative_definite_only);
    if (!sol) return std::nullopt;
    std::vector<Rational> x;
    x.reserve(m.size());
    if constexpr (std::is_same_v<typename A::Int, std::int64_t>) {
      if (scale == 1) {
        // Common case: stay in machine integers until the final fractions.
        for (auto y : sol->scaled) x.push_back(Rational::from_ratio(y, sol->det));
        return x;
      }
    }
    const BigInt denom = A::big(sol->det) * scale;
    for (const auto& y : sol->scaled) x.emplace_back(A::big(y), denom);
    return x;
  });
}

template <class B>
std::vector<Rational> solve_scaled(const IntMatrix& m, const std::vector<B>& b, const BigInt& scale) {
  auto x = try_solve_scaled(m, b, scale, false);
  if (!x) throw SingularMatrixError("matrix is not invertible (determinant 0)");
  return std::move(*x);
}

}  // namespace

std::vector<Rational> solve_linear_system(const IntMatrix& m, std::span<const Rational> rhs) {
  check_rhs_size(m, rhs.size());
  if (m.size() == 0) return {};
  BigInt scale(1);
  for (const auto& r : rhs) scale = lcm(scale, r.denominator());
  std::vector<BigInt> b;
  b.reserve(rhs.size());
  for (const auto& r : rhs) b.push_back(r.numerator() * (scale / r.denominator()));
  return solve_scaled(m, b, scale);
}

std::vector<Rational> solve_linear_system(const IntMatrix& m, std::span<const std::int64_t> rhs) {
  check_rhs_size(m, rhs.size());
  if (m.size() == 0) return {};
  const std::vector<std::int64_t> b(rhs.begin(), rhs.end());
  return solve_scaled(m, b, BigInt(1));
}

std::optional<std::vector<Rational>> solve_negative_definite(const IntMatrix& m, std::span<const std::int64_t> rhs) {
  check_rhs_size(m, rhs.size());
  if (!m.is_symmetric()) throw ContractViolation("solve_negative_definite requires a symmetric matrix");
  if (m.size() == 0) return std::vector<Rational>{};
  const std::vector<std::int64_t> b(rhs.begin(), rhs.end());
  return try_solve_scaled(m, b, BigInt(1), true);
}

}  // namespace surfsing
