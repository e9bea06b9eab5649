#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsp/errors.hpp"

namespace qsp {

// Arbitrary-precision rational scalar. Stored in lowest terms with positive
// denominator (mpq canonical form); all arithmetic is exact.
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  ExactScalar(int n) : v_(n) {}                             // NOLINT
  ExactScalar(long num, long den);
  explicit ExactScalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Text format "p" or "p/q" with optional leading sign.
  static ExactScalar parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }
  ExactScalar inv() const;

  ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { a += b; return a; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { a -= b; return a; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { a *= b; return a; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { a /= b; return a; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline ExactScalar scalar_parse(std::string_view text) { return ExactScalar::parse(text); }
inline std::string scalar_format(const ExactScalar& s) { return s.str(); }

// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const ExactScalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<ExactScalar> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. 0x0 determinant is 1.
ExactScalar det_exact(const ExactMatrix& m);

// Cofactor expansion along the first row; kept simple for small matrices over
// arbitrary exact fields (rational functions in particular).
template <class F>
F det_cofactor(const std::vector<std::vector<F>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return F(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  F acc(0);
  std::vector<std::vector<F>> minor(n - 1, std::vector<F>(n - 1, F(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    F term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

// Field-generic determinant dispatch: Bareiss for exact rationals, cofactor
// expansion otherwise (rational-function entries stay tiny).
template <class F>
F det_field(const std::vector<std::vector<F>>& m) {
  if constexpr (std::is_same_v<F, ExactScalar>) {
    const std::size_t n = m.size();
    ExactMatrix em(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) em.at(i, j) = m[i][j];
    return det_exact(em);
  } else {
    return det_cofactor(m);
  }
}

}  // namespace qsp
