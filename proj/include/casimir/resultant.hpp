// Sylvester resultants via fraction-free (Bareiss) elimination over an
// exact commutative ring.
#pragma once

#include <stdexcept>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/surd.hpp"
#include "casimir/unipoly.hpp"

namespace casimir {

inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Surd ring_exact_div(const Surd& a, const Surd& b) { return a / b; }
template <typename T>
UniPoly<T> ring_exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
  return a.exact_div(b);
}

/// Determinant by Bareiss one-step elimination with row pivoting; every
/// division is exact in the ring. Destroys its argument.
template <typename R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("bareiss_determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: not square");
  if (n == 1) return m[0][0];
  R prev = R(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return R(0);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ring_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  return negate ? R(0) - m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Resultant of p and q in their shared variable, whose coefficients
/// (ascending) live in the ring R. Vanishes exactly iff p and q share a
/// root over the fraction field's closure.
template <typename R>
R sylvester_resultant(const std::vector<R>& p, const std::vector<R>& q) {
  if (p.empty() || q.empty() || p.back().is_zero() || q.back().is_zero())
    throw std::invalid_argument("sylvester_resultant: zero or untrimmed input");
  const std::size_t dp = p.size() - 1, dq = q.size() - 1;
  if (dp == 0 && dq == 0)
    throw std::invalid_argument("sylvester_resultant: both inputs constant");
  if (dp == 0) {
    R r = R(1);
    for (std::size_t i = 0; i < dq; ++i) r = r * p[0];
    return r;
  }
  if (dq == 0) {
    R r = R(1);
    for (std::size_t i = 0; i < dp; ++i) r = r * q[0];
    return r;
  }
  const std::size_t n = dp + dq;
  std::vector<std::vector<R>> m(n, std::vector<R>(n, R(0)));
  for (std::size_t row = 0; row < dq; ++row)
    for (std::size_t i = 0; i <= dp; ++i) m[row][row + i] = p[dp - i];
  for (std::size_t row = 0; row < dp; ++row)
    for (std::size_t i = 0; i <= dq; ++i) m[dq + row][row + i] = q[dq - i];
  return bareiss_determinant(std::move(m));
}

}  // namespace casimir
