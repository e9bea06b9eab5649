#pragma once

#include <utility>
#include <vector>

#include "qsp/exact.hpp"

namespace qsp {

// Univariate polynomial over ExactScalar, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const ExactScalar& k) { if (!k.is_zero()) c_.push_back(k); }  // NOLINT
  Poly(long k) : Poly(ExactScalar(k)) {}                             // NOLINT
  explicit Poly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable();  // x

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const ExactScalar& coeff(std::size_t i) const;
  const std::vector<ExactScalar>& coeffs() const { return c_; }
  const ExactScalar& leading() const;

  ExactScalar eval(const ExactScalar& p) const;
  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const ExactScalar& k) const;

  // Euclidean division: returns (quotient, remainder).
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<ExactScalar> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

// Interpolating polynomial through the given points (pairwise distinct
// abscissae), degree < number of points, exact.
Poly poly_interpolate(const std::vector<std::pair<ExactScalar, ExactScalar>>& points);

// Rational function num/den over ExactScalar. Always stored reduced (coprime
// num/den by exact gcd) with monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(ExactScalar(1)) {}
  RatFun(long k) : num_(ExactScalar(k)), den_(ExactScalar(1)) {}       // NOLINT
  RatFun(const ExactScalar& k) : num_(k), den_(ExactScalar(1)) {}      // NOLINT
  RatFun(Poly num) : num_(std::move(num)), den_(ExactScalar(1)) {}     // NOLINT
  RatFun(Poly num, Poly den);

  static RatFun variable() { return RatFun(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
  RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
  RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
  RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

 private:
  void reduce();
  Poly num_, den_;
};

// Exact value num(p)/den(p); pole error when den(p) = 0.
ExactScalar ratfun_eval(const RatFun& f, const ExactScalar& p);

// Exact limit at p. Removable singularities are gone after gcd reduction, so
// a vanishing (reduced) denominator at p is a genuine pole.
ExactScalar ratfun_limit(const RatFun& f, const ExactScalar& p);

// Exact residue at p: 0 if f regular at p, num(p)/den'(p) for a simple pole,
// pole_order_error for higher order.
ExactScalar ratfun_residue(const RatFun& f, const ExactScalar& p);

}  // namespace qsp
